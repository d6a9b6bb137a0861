"""The invariant chain D, Omega, Delta, N, N1..N5 of a ternary form."""

from dataclasses import dataclass, asdict
from math import gcd

from .arith import DEFAULT_TRIAL_BOUND, is_squarefree, legendre, prime_divisors
from .errors import HypothesisError
from .exact_linalg import Form, adjugate, determinant, exact_div, mat_content


@dataclass(frozen=True)
class InvariantSet:
    D: int
    Omega: int
    Delta: int
    N: int
    N1: int | None
    N2: int | None
    N3: int | None
    N4: int | None
    N5: int | None
    special: bool

    @property
    def ns(self):
        return (self.N1, self.N2, self.N3, self.N4, self.N5)

    @property
    def odd(self):
        return self.D % 2 == 1

    def to_json(self):
        return asdict(self)

    def require_special_odd(self):
        if not self.special:
            raise HypothesisError("form is not special")
        if not self.odd:
            raise HypothesisError(f"determinant {self.D} is even")


def omega(S):
    """Omega < 0 with -Omega the gcd of the 2x2 minors of S."""
    if determinant(S) <= 0:
        raise HypothesisError("Omega is defined here for det(S) > 0")
    return -mat_content(adjugate(S))


def primitive_adjugate(S):
    """S^dagger = S*/Omega."""
    return Form.from_matrix(exact_div(adjugate(S), omega(S)))


def factor_invariants(S, bound=DEFAULT_TRIAL_BOUND):
    """Compute D, Omega, Delta and the N1..N5 factorization.

    ``special`` is the arithmetic half of the definition (N, Omega/N and
    Delta/N square-free); isotropy is decided separately.  When the
    divisibilities behind N1..N5 fail (only possible for non-special
    forms) those fields are None.
    """
    D = determinant(S)
    Om = omega(S)
    Delta, r = divmod(D, Om * Om)
    assert r == 0, "Omega^2 must divide D"
    N = gcd(-Om, Delta)
    N5 = gcd(N, -Om // N)
    N4 = gcd(N, Delta // N)
    ns = (None,) * 5
    if N % (N4 * N5) == 0 and (-Om) % (N * N5) == 0 and Delta % (N * N4) == 0:
        N3 = N // (N4 * N5)
        N2 = -Om // (N * N5)
        N1 = Delta // (N * N4)
        assert D == N1 * N2**2 * N3**3 * N4**4 * N5**5
        ns = (N1, N2, N3, N4, N5)
    special = (
        ns[0] is not None
        and is_squarefree(N, bound)
        and is_squarefree(-Om // N, bound)
        and is_squarefree(Delta // N, bound)
        and _pairwise_coprime(ns)
    )
    return InvariantSet(D, Om, Delta, N, *ns, special=special)


def _pairwise_coprime(values):
    return all(gcd(u, v) == 1 for i, u in enumerate(values) for v in values[i + 1:])


def genus_characters(S, inv=None, zero=None):
    """Map p -> (ell/p) for every prime p | N, ell the canonical label of S.

    Needs S special, odd determinant and isotropic; a zero is searched
    for when none is supplied.
    """
    from .isotropy import find_zero
    from .reduction import reduce_special

    inv = inv or factor_invariants(S)
    inv.require_special_odd()
    if zero is None:
        zero = find_zero(S, 200)
        if zero is None:
            raise HypothesisError("no zero found; form is not known to be isotropic")
    ell = reduce_special(S, zero, inv=inv).ell
    return characters_of(ell, inv.N)


def characters_of(ell, N):
    return {p: legendre(ell, p) for p in prime_divisors(N)}
