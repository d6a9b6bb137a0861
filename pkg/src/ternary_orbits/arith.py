"""Small exact number-theory helpers: extended gcd, trial-division factoring, Legendre symbols."""

from functools import reduce
from math import gcd

DEFAULT_TRIAL_BOUND = 10**6


def content(values):
    return reduce(gcd, values, 0)


def ext_gcd(a, b):
    """Return (g, u, v) with u*a + v*b == g == gcd(a, b) >= 0.

    The pair is normalized so that |u| is minimal over all Bezout pairs,
    ties going to u >= 0.
    """
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    g, u, v = old_r, old_u, old_v
    if g == 0:
        return 0, 0, 0
    step_u, step_v = b // g, -(a // g)
    if step_u:
        m = abs(step_u)
        k = (u % m)
        # k is u reduced into [0, m); the minimal representative is k or k - m
        target = k if 2 * k <= m else k - m
        t = (target - u) // step_u
        u, v = u + t * step_u, v + t * step_v
    else:
        # b == 0: u = sign(a) and v is free
        v = 0
    return g, u, v


def inverse_mod(a, m):
    g, u, _ = ext_gcd(a % m, m)
    if g != 1:
        raise ValueError(f"{a} is not invertible modulo {m}")
    return u % m


def factorize(n, bound=DEFAULT_TRIAL_BOUND):
    """Factor |n| by trial division with primes up to ``bound``.

    Returns a dict prime -> exponent.  Raises ValueError when a cofactor
    survives that trial division up to ``bound`` cannot certify as prime.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out = {}
    p = 2
    while p * p <= n:
        if p > bound:
            raise ValueError(f"trial division bound {bound} exceeded while factoring")
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_divisors(n, bound=DEFAULT_TRIAL_BOUND):
    return sorted(factorize(n, bound)) if abs(n) > 1 else []


def is_squarefree(n, bound=DEFAULT_TRIAL_BOUND):
    if n == 0:
        return False
    return all(e == 1 for e in factorize(n, bound).values())


def legendre(a, p):
    """Legendre symbol (a/p) for an odd prime p, in {-1, 0, 1}."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def euler_phi(n):
    out = n
    for p in prime_divisors(n):
        out = out // p * (p - 1)
    return out
