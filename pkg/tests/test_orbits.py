import random
from fractions import Fraction
from math import gcd, prod

import pytest
from hypothesis import given, settings, strategies as st

from conftest import NAMED
from ternary_orbits.acceptance import DIAG27_LABELS, ODD_PRIMES
from ternary_orbits.arith import prime_divisors
from ternary_orbits.errors import HypothesisError
from ternary_orbits.exact_linalg import Form
from ternary_orbits.heights import HeightVector
from ternary_orbits.invariants import characters_of, factor_invariants
from ternary_orbits.orbits import (
    admissible_ells,
    class_orbit_count,
    expected_genus_total,
    genus_orbit_sum,
    local_orbit_count,
    orbit_count,
)
from ternary_orbits.reduction import invariants_from_ns

Q17 = factor_invariants(NAMED["legendre_17"])


def test_admissible_q17():
    assert admissible_ells(Q17, {17: 1}) == [1, 2, 4, 8, 9, 13, 15, 16]
    assert admissible_ells(Q17, {17: -1}) == [3, 5, 6, 7, 10, 11, 12, 14]
    with pytest.raises(ValueError):
        admissible_ells(Q17, {3: 1})


@given(st.integers(0, 2**32))
@settings(max_examples=60)
def test_admissible_count(seed):
    rng = random.Random(seed)
    N = prod(rng.sample(ODD_PRIMES[:8], rng.randint(1, 3)))
    inv = invariants_from_ns(1, 1, N, 1, 1)
    ell = rng.choice([l for l in range(N) if gcd(l, N) == 1])
    adm = admissible_ells(inv, characters_of(ell, N))
    assert ell in adm
    assert len(adm) == prod((p - 1) // 2 for p in prime_divisors(N)) == expected_genus_total(inv)


def test_local_counts():
    assert local_orbit_count(Q17, 17) == 8
    assert local_orbit_count(Q17, 3) == 1
    with pytest.raises(HypothesisError):
        local_orbit_count(Q17, 2)


def test_class_formula():
    assert class_orbit_count(NAMED["legendre_17"], 2, Q17) == 4
    assert class_orbit_count(NAMED["legendre_17"], 1, Q17) == 8
    with pytest.raises(ValueError):
        class_orbit_count(NAMED["legendre_17"], 3, Q17)
    with pytest.raises(HypothesisError):
        class_orbit_count(NAMED["diag27"], 1)


def test_orbit_count_diag27():
    oc = orbit_count(NAMED["diag27"], hv=HeightVector.for_form(NAMED["diag27"], (0, 2, 0)))
    assert oc.stable
    assert set(oc.labels) == set(DIAG27_LABELS)
    assert oc.count == 3


def test_orbit_count_q17():
    oc = orbit_count(NAMED["legendre_17"])
    assert oc.stable and oc.count == 4
    assert [lab.ell for lab in oc.labels] == [1, 4, 13, 16]


def test_unsaturated_schedule():
    oc = orbit_count(NAMED["legendre_17"], schedule=[Fraction(40)])
    assert not oc.stable


def test_genus_partition_unimodular():
    part = genus_orbit_sum(Form.diagonal(1, -1, -1))
    assert part.verified and part.classes == [[0]]


def test_genus_partition_q17_threads():
    part = genus_orbit_sum(NAMED["legendre_17"], threads=2)
    assert part.verified
    assert part.classes == [[1, 4, 13, 16], [2, 8, 9, 15]]
