"""Orbit-resolved counts of zeros by height, empirical densities and the
linear-growth constant kappa."""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from .arith import is_squarefree, prime_divisors
from .errors import HypothesisError
from .heights import HeightVector, make_height_vector
from .invariants import factor_invariants
from .isotropy import enumerate_zeros
from .reduction import orbit_label

__all__ = [
    "DensityReport",
    "HeightVector",
    "fit_kappa",
    "kappa",
    "make_height_vector",
    "orbit_resolved_count",
    "density_report",
]


@dataclass
class DensityReport:
    schedule: list
    labels: list
    counts: dict = field(default_factory=dict)  # label -> [count at each T]
    totals: list = field(default_factory=list)

    def ratios(self, idx=-1):
        tot = self.totals[idx]
        return {lab: (Fraction(c[idx], tot) if tot else Fraction(0)) for lab, c in self.counts.items()}

    def rows(self):
        for i, T in enumerate(self.schedule):
            for lab in self.labels:
                c = self.counts[lab][i]
                r = Fraction(c, self.totals[i]) if self.totals[i] else Fraction(0)
                yield T, lab, c, r

    def to_json(self):
        return {
            "schedule": [str(T) for T in self.schedule],
            "totals": self.totals,
            "rows": [
                {"T": str(T), "label": lab.to_json(), "count": c, "ratio": str(r)}
                for T, lab, c, r in self.rows()
            ],
        }


def _labelled(S, zeros, inv):
    return [orbit_label(S, x, inv) for x in zeros]


def orbit_resolved_count(S, hv, T, inv=None):
    """Counter label -> number of zeros with 0 < x.y <= T."""
    inv = inv or factor_invariants(S)
    zeros = enumerate_zeros(S, hv, T)
    return Counter(_labelled(S, zeros, inv))


def density_report(S, hv=None, schedule=(2500, 5000, 10000, 20000), inv=None):
    """Counts per orbit label at every T of the schedule (one enumeration at max T)."""
    inv = inv or factor_invariants(S)
    hv = hv or make_height_vector(S)
    schedule = sorted(Fraction(T) for T in schedule)
    zeros = enumerate_zeros(S, hv, schedule[-1])
    labels = _labelled(S, zeros, inv)
    bounds = [hv.key_bound(T) for T in schedule]
    seen = sorted(set(labels))
    counts = {lab: [0] * len(schedule) for lab in seen}
    for key, lab in zip(zeros.keys, labels):
        for i, H in enumerate(bounds):
            if key <= H:
                counts[lab][i] += 1
    totals = [sum(counts[lab][i] for lab in seen) for i in range(len(schedule))]
    return DensityReport(schedule, seen, counts, totals)


def kappa(inv, h, dps=50):
    """3h / (2 pi sqrt(D)) * prod_{p|2D} 2p/(p+1) * prod_{p|N} 2/(p-1).

    Valid when Omega and Delta are square-free and odd.  The prime 2 always
    contributes its factor 4/3; the unimodular form x1^2 - x2^2 - x3^2
    (h = 1, slope 2/pi from the classical count of primitive Pythagorean
    triples) pins this down.
    """
    if not (is_squarefree(inv.Omega) and is_squarefree(inv.Delta)):
        raise HypothesisError("kappa needs square-free Omega and Delta")
    if inv.Omega % 2 == 0 or inv.Delta % 2 == 0:
        raise HypothesisError("kappa needs odd Omega and Delta")
    with mpmath.workdps(dps):
        val = mpmath.mpf(3 * h) / (2 * mpmath.pi * mpmath.sqrt(inv.D))
        for p in prime_divisors(2 * inv.D):
            val *= mpmath.mpf(2 * p) / (p + 1)
        for p in prime_divisors(inv.N):
            val *= mpmath.mpf(2) / (p - 1)
        return +val


@dataclass
class KappaFit:
    slopes: dict  # label -> slope through the origin
    stderr: dict  # label -> standard error of the slope
    spread: float  # (max - min) / mean over labels

    def relative_to(self, target):
        target = float(target)
        return {lab: abs(s - target) / target for lab, s in self.slopes.items()}


def fit_kappa(report):
    """Least-squares slope of count against T through the origin, per label."""
    T = np.array([float(t) for t in report.schedule])
    if T.size < 4:
        raise ValueError("need at least 4 schedule points")
    slopes, errs = {}, {}
    denom = float(T @ T)
    for lab in report.labels:
        c = np.array(report.counts[lab], dtype=float)
        s = float(T @ c) / denom
        resid = c - s * T
        slopes[lab] = s
        errs[lab] = float(np.sqrt(resid @ resid / (T.size - 1) / denom))
    vals = np.array(list(slopes.values()))
    spread = float((vals.max() - vals.min()) / vals.mean()) if vals.size and vals.mean() else 0.0
    return KappaFit(slopes, errs, spread)
