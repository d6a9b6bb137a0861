from math import gcd

import pytest
from hypothesis import given

from conftest import NAMED, unimodulars
from ternary_orbits.errors import HypothesisError
from ternary_orbits.exact_linalg import Form, congruence_transform
from ternary_orbits.invariants import factor_invariants, genus_characters, omega, primitive_adjugate
from ternary_orbits.reduction import build_canonical, canonical_adjugate, invariants_from_ns


@pytest.mark.parametrize("name,om", [("diag27", -1), ("legendre_17", -17), ("triple_s1", -1)])
def test_omega(name, om):
    assert omega(NAMED[name]) == om


def test_example_invariants():
    inv = factor_invariants(NAMED["legendre_17"])
    assert (inv.D, inv.Omega, inv.Delta, inv.N) == (4913, -17, 17, 17)
    assert inv.ns == (1, 1, 17, 1, 1)
    assert inv.special and inv.odd
    inv = factor_invariants(NAMED["diag27"])
    assert (inv.D, inv.Omega, inv.Delta, inv.N) == (27, -1, 27, 1)
    assert inv.ns == (27, 1, 1, 1, 1)
    assert not inv.special  # Delta/N = 27 is not square-free


def test_primitive_adjugate_sign():
    # S* = diag(17, -289, -4913), divided by Omega = -17
    assert primitive_adjugate(NAMED["legendre_17"]) == Form.diagonal(-1, 17, 289)
    assert primitive_adjugate(NAMED["triple_s1"]).matrix == ((1, -3, -9), (-3, 9, 0), (-9, 0, 0))


@pytest.mark.parametrize("ns", [(1, 1, 17, 1, 1), (3, 5, 7, 1, 1), (1, 1, 3, 5, 1), (7, 1, 1, 1, 3), (1, 3, 5, 1, 1)])
def test_canonical_adjugate_matches(ns):
    inv = invariants_from_ns(*ns)
    for ell in range(1, min(inv.N, 12)):
        if inv.N > 1 and gcd(ell, inv.N) != 1:
            continue
        got = primitive_adjugate(build_canonical(inv, ell)).matrix
        assert got == canonical_adjugate(inv, ell)
        # the usual display is S*/|Omega|: same matrix up to a global sign
        N1, N2, N3, N4, N5 = ns
        off = N3 * N5**2 * N4 * N1
        shown = ((-ell * N5 * N1, 0, off), (0, -N3 * N4**3 * N2, 0), (off, 0, 0))
        assert got == tuple(tuple(-v for v in row) for row in shown)


@given(unimodulars(proper=False))
def test_invariants_are_class_invariants(U):
    for S in NAMED.values():
        assert factor_invariants(congruence_transform(S, U)) == factor_invariants(S)


def test_chain_identities():
    for S in NAMED.values():
        inv = factor_invariants(S)
        assert inv.D == inv.Omega**2 * inv.Delta
        N1, N2, N3, N4, N5 = inv.ns
        assert inv.D == N1 * N2**2 * N3**3 * N4**4 * N5**5


def test_requires_positive_determinant():
    with pytest.raises(HypothesisError):
        factor_invariants(Form.diagonal(1, 1, -1))


def test_characters_q17():
    assert genus_characters(NAMED["legendre_17"]) == {17: 1}
    with pytest.raises(HypothesisError):
        genus_characters(NAMED["diag27"])


def test_ns_roundtrip():
    with pytest.raises(ValueError):
        invariants_from_ns(3, 3, 1, 1, 1)
