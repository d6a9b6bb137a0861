"""Orbit counts c(S), the genus-wide partition of labels and the orbit-count formulas."""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .arith import euler_phi, legendre, prime_divisors
from .errors import HypothesisError
from .exact_linalg import transform_matrix
from .heights import make_height_vector
from .invariants import characters_of, factor_invariants, genus_characters
from .isotropy import enumerate_zeros, find_zero
from .reduction import build_canonical, canonical_matrix, label_transform, orbit_label

THREADS_ENV = "TERNARY_ORBITS_THREADS"
T_CAP = 10**6


def admissible_ells(inv, chi):
    """ell in [0, N) prime to N with (ell/p) = chi[p] for all p | N."""
    inv.require_special_odd()
    N = inv.N
    if N == 1:
        return [0]
    ps = prime_divisors(N)
    if set(chi) != set(ps):
        raise ValueError(f"characters given for {sorted(chi)}, need {ps}")
    return [l for l in range(N) if gcd(l, N) == 1 and all(legendre(l, p) == chi[p] for p in ps)]


def expected_genus_total(inv):
    """prod_{p | N} (p - 1)/2, i.e. phi(N) / 2^nu(N)."""
    ps = prime_divisors(inv.N)
    return euler_phi(inv.N) // 2 ** len(ps)


@dataclass
class OrbitCount:
    labels: list
    stable: bool
    T: Fraction
    zeros: int
    witnesses: dict = field(default_factory=dict)  # label -> (zero, transform)
    history: list = field(default_factory=list)  # (T, #labels, #zeros)

    @property
    def count(self):
        return len(self.labels)


def _initial_height(S, hv):
    x = find_zero(S, 64)
    if x is None:
        return Fraction(1)
    h = abs(hv.height_float(x))
    return Fraction(max(1, int(h) + 1))


def orbit_count(S, schedule=None, hv=None, min_zeros=32, T_cap=T_CAP, inv=None):
    """Label zeros by height until the label set survives one doubling of T.

    With an explicit ``schedule`` the same stopping rule is applied along
    it; otherwise T starts near the height of a small zero and doubles.
    """
    inv = inv or factor_invariants(S)
    hv = hv or make_height_vector(S)
    if schedule is None:
        T = _initial_height(S, hv)
        schedule = []
        while T <= T_cap:
            schedule.append(T)
            T *= 2
    prev, prev_n = None, 0
    witnesses = {}
    history = []
    T = Fraction(0)
    n = 0
    for T in (Fraction(t) for t in schedule):
        zeros = enumerate_zeros(S, hv, T)
        n = len(zeros)
        for x in zeros:
            lab = orbit_label(S, x, inv)
            if lab not in witnesses:
                witnesses[lab] = (x, label_transform(S, x, inv))
        labels = set(witnesses)
        history.append((T, len(labels), n))
        if prev is not None and labels == prev and prev_n >= min_zeros and labels:
            return OrbitCount(sorted(labels), True, T, n, witnesses, history)
        prev, prev_n = labels, n
    return OrbitCount(sorted(witnesses), False, T, n, witnesses, history)


@dataclass
class GenusOrbitPartition:
    admissible: list
    classes: list
    stable: bool
    expected_total: int
    witnesses: dict = field(default_factory=dict)  # (ell, ell') -> transform

    @property
    def total(self):
        return sum(len(c) for c in self.classes)

    @property
    def verified(self):
        return self.stable and self.total == self.expected_total and \
            sorted(l for c in self.classes for l in c) == sorted(self.admissible)

    def to_json(self):
        return {
            "admissible": self.admissible,
            "classes": self.classes,
            "total": self.total,
            "expected_total": self.expected_total,
            "stable": self.stable,
        }


def _orbit_ells(args):
    inv, ell = args
    S3 = build_canonical(inv, ell)
    oc = orbit_count(S3, inv=inv)
    found = {}
    for lab, (x, A) in oc.witnesses.items():
        assert transform_matrix(S3, A) == canonical_matrix(inv, lab.ell)
        found[lab.ell] = A
    return ell, found, oc.stable


def genus_orbit_sum(S, threads=None):
    """Group the admissible labels of the genus of S into proper-equivalence classes.

    Each canonical form S3(ell) has its orbits counted; the labels ell'
    met along the way are properly equivalent to ell, with the reduction
    transform as witness.
    """
    inv = factor_invariants(S)
    inv.require_special_odd()
    chi = genus_characters(S, inv)
    adm = admissible_ells(inv, chi)
    threads = threads or int(os.environ.get(THREADS_ENV, "1"))

    parent = {l: l for l in adm}

    def find(l):
        while parent[l] != l:
            parent[l] = parent[parent[l]]
            l = parent[l]
        return l

    stable = True
    witnesses = {}
    done = set()

    def absorb(ell, found, ok):
        nonlocal stable
        stable &= ok
        for other, A in found.items():
            if other not in parent:
                raise AssertionError(f"label {other} outside the admissible set")
            witnesses[(ell, other)] = A
            parent[find(other)] = find(ell)
            done.add(other)
        done.add(ell)

    if threads > 1:
        with ProcessPoolExecutor(threads) as pool:
            for res in pool.map(_orbit_ells, [(inv, l) for l in adm]):
                absorb(*res)
    else:
        for l in adm:
            if l not in done:
                absorb(*_orbit_ells((inv, l)))

    blocks = {}
    for l in adm:
        blocks.setdefault(find(l), []).append(l)
    classes = sorted(sorted(b) for b in blocks.values())
    return GenusOrbitPartition(adm, classes, stable, expected_genus_total(inv), witnesses)


def local_orbit_count(inv, p):
    """c_p(S) for special S with odd D: (p - 1)/2 when p | N, else 1."""
    inv.require_special_odd()
    if p == 2:
        raise HypothesisError("p = 2 is outside the odd-determinant theory")
    return (p - 1) // 2 if inv.N % p == 0 else 1


def class_orbit_count(S, h, inv=None):
    """c(S) = h^{-1} prod_{p | N} (p - 1)/2 for special S with odd D."""
    inv = inv or factor_invariants(S)
    inv.require_special_odd()
    val = Fraction(expected_genus_total(inv), h)
    if val.denominator != 1:
        raise ValueError(f"{val} is not an integer: class number {h} is inconsistent")
    return int(val)


def label_set_characters(labels, inv):
    return {l.ell: characters_of(l.ell, inv.N) for l in labels}
