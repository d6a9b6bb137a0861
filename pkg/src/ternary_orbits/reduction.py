"""Reduction of a form along a primitive zero.

A zero x is moved to e1 by a proper unimodular change of variables, which
brings S to the shape

    [[0, 0, a], [0, -b, c], [a, c, d]]          (the "triple" shape)

with a, b > 0 and c mod gcd(a, b) depending only on the orbit of x.  For
special forms with odd determinant the shape is pushed further to

    [[0, 0, N3 N5 N4^2 N2], [0, -N3 N5^3 N1, 0], [N3 N5 N4^2 N2, 0, N4 N2 ell]]

with 0 <= ell < N, gcd(ell, N) = 1, and ell is the orbit label.
"""

from dataclasses import dataclass
from math import gcd

from .arith import ext_gcd, inverse_mod
from .errors import HypothesisError, NotAZeroError
from .exact_linalg import (
    Form,
    Unimodular,
    complete_to_unimodular,
    evaluate,
    mat_pow,
    transform_matrix,
)
from .invariants import InvariantSet, factor_invariants, primitive_adjugate


@dataclass(frozen=True)
class TripleForm:
    a: int
    b: int
    c: int
    d: int
    transform: Unimodular

    @property
    def matrix(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        return ((0, 0, a), (0, -b, c), (a, c, d))

    @property
    def c_mod(self):
        return self.c % gcd(self.a, self.b)

    def to_json(self):
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}


@dataclass(frozen=True)
class CanonicalForm:
    inv: InvariantSet
    ell: int
    transform: Unimodular
    triple: TripleForm
    normalized: bool = True

    @property
    def matrix(self):
        return canonical_matrix(self.inv, self.ell)

    def to_json(self):
        return {"ell": self.ell, "N": self.inv.N, "normalized": self.normalized}


@dataclass(frozen=True, order=True)
class SpecialLabel:
    ell: int

    def to_json(self):
        return {"kind": "special", "ell": self.ell}

    def __str__(self):
        return f"ell={self.ell}"


@dataclass(frozen=True, order=True)
class GeneralLabel:
    a: int
    b: int
    c_mod: int

    def to_json(self):
        return {"kind": "general", "a": self.a, "b": self.b, "c_mod": self.c_mod}

    def __str__(self):
        return f"({self.a},{self.b},{self.c_mod})"


def _check_zero(S, x):
    x = tuple(int(v) for v in x)
    if len(x) != 3 or not any(x) or gcd(*x) != 1:
        raise NotAZeroError(f"{x} is not a primitive vector")
    if evaluate(S, x) != 0:
        raise NotAZeroError(f"S{x} = {evaluate(S, x)} != 0")
    return x


def reduce_to_triple(S, x):
    x = _check_zero(S, x)
    M1 = complete_to_unimodular(x)
    S1 = transform_matrix(S, M1)
    s1, s2 = S1[0][1], S1[0][2]
    a, u, v = ext_gcd(s1, s2)
    if a == 0:
        raise HypothesisError("singular form: the zero is in the radical")
    M2 = Unimodular(((1, 0, 0), (0, s2 // a, u), (0, -s1 // a, v)))
    A = M1 @ M2
    T = transform_matrix(S, A)
    assert T[0][0] == 0 and T[0][1] == 0 and T[0][2] == a
    b = -T[1][1]
    if b <= 0:
        raise HypothesisError("reduction needs det(S) > 0")
    return TripleForm(a, b, T[1][2], T[2][2], A)


def canonical_matrix(inv, ell):
    N1, N2, N3, N4, N5 = inv.ns
    a = N3 * N5 * N4**2 * N2
    b = N3 * N5**3 * N1
    return ((0, 0, a), (0, -b, 0), (a, 0, N4 * N2 * ell))


def canonical_adjugate(inv, ell):
    """Primitive adjugate S*/Omega of the canonical form.

    Entrywise this is the negative of the commonly displayed matrix
    [[-ell N5 N1, 0, N3 N5^2 N4 N1], [0, -N3 N4^3 N2, 0], [., 0, 0]],
    which equals S*/|Omega|.
    """
    N1, N2, N3, N4, N5 = inv.ns
    off = N3 * N5**2 * N4 * N1
    return ((ell * N5 * N1, 0, -off), (0, N3 * N4**3 * N2, 0), (-off, 0, 0))


def t3_matrix(inv):
    """Unipotent step shifting ell by N; integral because D is odd."""
    N1, N2, N3, N4, N5 = inv.ns
    if not inv.odd:
        raise HypothesisError("the ell-shift step needs odd D")
    return (
        (1, N5**2 * N1, (1 + N5**2 * N4**2 * N2 * N1) // 2),
        (0, 1, N4**2 * N2),
        (0, 0, 1),
    )


def reduce_special(S, x, inv=None, normalize=True):
    """Carry S, along the zero x, to the canonical shape with label ell."""
    inv = inv or factor_invariants(S)
    if not inv.special:
        raise HypothesisError("form is not special")
    if normalize and not inv.odd:
        raise HypothesisError(f"normalizing ell needs odd D (D = {inv.D})")
    N1, N2, N3, N4, N5 = inv.ns
    tri = reduce_to_triple(S, x)
    a, b, c = tri.a, tri.b, tri.c
    if a != N3 * N5 * N4**2 * N2 or b != N3 * N5**3 * N1:
        raise HypothesisError(f"(a, b) = ({a}, {b}) does not match the invariants")
    c1, r = divmod(c, N3 * N5)
    assert r == 0, "c must be divisible by N3 N5"

    m = N4**2 * N2
    assert gcd(N5**2 * N1, m) == 1
    t1 = (c1 * inverse_mod(N5**2 * N1, m)) % m if m > 1 else 0
    k, r = divmod(c - b * t1, a)
    assert r == 0
    T1 = Unimodular(((1, 0, 0), (0, 1, t1), (0, 0, 1)))
    T2 = Unimodular(((1, -k, 0), (0, 1, 0), (0, 0, 1)))
    A = tri.transform @ T1 @ T2
    S3 = transform_matrix(S, A)
    ell, r = divmod(S3[2][2], N4 * N2)
    assert r == 0, "(3,3)-entry must be divisible by N4 N2"

    if normalize:
        shift = -(ell // inv.N)
        if shift:
            A = A @ Unimodular(mat_pow(t3_matrix(inv), shift))
            ell += shift * inv.N
        if gcd(ell, inv.N) != 1:
            raise HypothesisError(f"ell = {ell} is not prime to N = {inv.N}")
    out = CanonicalForm(inv, ell, A, tri, normalized=normalize)
    assert transform_matrix(S, A) == out.matrix
    return out


def orbit_label(S, x, inv=None):
    """SpecialLabel(ell) for special odd-D forms, else GeneralLabel(a, b, c mod gcd(a, b))."""
    inv = inv or factor_invariants(S)
    if inv.special and inv.odd:
        return SpecialLabel(reduce_special(S, x, inv=inv).ell)
    tri = reduce_to_triple(S, x)
    return GeneralLabel(tri.a, tri.b, tri.c_mod)


def label_transform(S, x, inv=None):
    """The proper transform behind orbit_label: S[A] is the canonical/triple matrix."""
    inv = inv or factor_invariants(S)
    if inv.special and inv.odd:
        return reduce_special(S, x, inv=inv).transform
    return reduce_to_triple(S, x).transform


def build_canonical(inv, ell):
    """The canonical form for the N-data of ``inv`` and label ``ell``."""
    if inv.ns[0] is None:
        raise HypothesisError("invariants carry no N-factorization")
    if inv.N > 1 and gcd(ell, inv.N) != 1:
        raise HypothesisError(f"ell = {ell} is not prime to N = {inv.N}")
    try:
        return Form.from_matrix(canonical_matrix(inv, ell))
    except ValueError as exc:
        raise HypothesisError(str(exc)) from None


def invariants_from_ns(N1, N2, N3, N4, N5):
    """InvariantSet for given N-data (used to build canonical forms from scratch)."""
    N = N3 * N4 * N5
    Om = -N * N5 * N2
    Delta = N * N4 * N1
    D = Om * Om * Delta
    S = Form.from_matrix(canonical_matrix(
        InvariantSet(D, Om, Delta, N, N1, N2, N3, N4, N5, False), 1 if N > 1 else 0))
    inv = factor_invariants(S)
    if inv.ns != (N1, N2, N3, N4, N5):
        raise HypothesisError(f"N-data {(N1, N2, N3, N4, N5)} is not consistent")
    return inv


def check_primitive_adjugate(S3, inv, ell):
    return primitive_adjugate(S3).matrix == canonical_adjugate(inv, ell)
