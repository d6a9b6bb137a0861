from fractions import Fraction
from math import pi, sqrt

import pytest

from conftest import NAMED
from ternary_orbits.counting import DensityReport, density_report, fit_kappa, kappa, orbit_resolved_count
from ternary_orbits.errors import HypothesisError
from ternary_orbits.exact_linalg import Form
from ternary_orbits.heights import HeightVector
from ternary_orbits.invariants import factor_invariants

Q17 = factor_invariants(NAMED["legendre_17"])
PYTH = Form.diagonal(1, -1, -1)


def test_kappa_closed_form_q17():
    # 3h/(2 pi sqrt(4913)) * (4/3)(34/18) * 2/16
    want = 3 * 2 / (2 * pi * sqrt(4913)) * (4 / 3) * (34 / 18) * (2 / 16)
    assert float(kappa(Q17, 2)) == pytest.approx(want, rel=1e-14)


def test_kappa_linear_in_class_number():
    assert abs(kappa(Q17, 6) / kappa(Q17, 2) - 3) < 1e-40


def test_kappa_unimodular():
    assert float(kappa(factor_invariants(PYTH), 1)) == pytest.approx(2 / pi, rel=1e-14)


def test_kappa_needs_squarefree():
    with pytest.raises(HypothesisError):
        kappa(factor_invariants(NAMED["diag27"]), 1)


def test_pythagorean_slope():
    # primitive triples with hypotenuse <= X grow like X/(2 pi); 8 sign/order copies
    rep = density_report(PYTH, HeightVector.for_form(PYTH, (2, 0, 0)), (1000, 2000, 4000, 8000))
    fit = fit_kappa(rep)
    (slope,) = fit.slopes.values()
    assert slope == pytest.approx(2 / pi, rel=0.02)


def test_fit_recovers_exact_slope():
    sched = [Fraction(t) for t in (10, 20, 40, 80)]
    rep = DensityReport(sched, ["a", "b"], {"a": [30, 60, 120, 240], "b": [30, 60, 120, 240]}, [60, 120, 240, 480])
    fit = fit_kappa(rep)
    assert fit.slopes == {"a": 3.0, "b": 3.0}
    assert fit.spread == 0.0
    assert fit.stderr["a"] == 0.0
    with pytest.raises(ValueError):
        fit_kappa(DensityReport(sched[:3], [], {}, [0, 0, 0]))


def test_report_sums_and_monotone():
    S = NAMED["diag27"]
    hv = HeightVector.for_form(S, (0, 2, 0))
    rep = density_report(S, hv, (100, 200, 400, 800))
    for i in range(4):
        assert sum(rep.counts[lab][i] for lab in rep.labels) == rep.totals[i]
    for lab in rep.labels:
        assert rep.counts[lab] == sorted(rep.counts[lab])
    assert sum(rep.ratios().values()) == 1
    direct = orbit_resolved_count(S, hv, 400)
    assert {lab: rep.counts[lab][2] for lab in rep.labels} == dict(direct)
