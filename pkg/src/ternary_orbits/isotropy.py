"""Zeros of ternary forms: brute-force search, height-bounded enumeration and
the Legendre-symbol isotropy criterion for special forms.

The enumeration kernels fix two coordinates on a grid and solve the
remaining quadratic (or linear) equation for the third, vectorized with
int64 numpy arrays.  When a magnitude bound says int64 could overflow the
kernel drops to exact Python integers.
"""

from bisect import bisect_right
from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

from .arith import legendre, prime_divisors
from .errors import HypothesisError, SearchError
from .exact_linalg import adjugate, determinant, evaluate, quad_value
from .heights import HeightVector
from .invariants import factor_invariants, primitive_adjugate

_INT64_SAFE = 2**62
_CHUNK = 1 << 22


def is_definite(S):
    m = S.matrix
    a = m[0][0]
    minor2 = m[0][0] * m[1][1] - m[0][1] ** 2
    D = determinant(S)
    return (a > 0 and minor2 > 0 and D > 0) or (a < 0 and minor2 > 0 and D < 0)


def _pick_axes(m, ranges):
    """Choose the solved coordinate k; the other two are scanned."""
    def cost(k):
        i, j = (t for t in range(3) if t != k)
        span = lambda r: r[1] - r[0] + 1
        return (m[k][k] == 0, span(ranges[i]) * span(ranges[j]))
    k = min(range(3), key=cost)
    i, j = (t for t in range(3) if t != k)
    return i, j, k


def _solve_python(m, i, j, k, xi_vals, xj_vals, k_range):
    skk = m[k][k]
    out = []
    for xi in xi_vals:
        for xj in xj_vals:
            B = m[k][i] * xi + m[k][j] * xj
            C = m[i][i] * xi * xi + m[j][j] * xj * xj + 2 * m[i][j] * xi * xj
            if skk:
                disc = B * B - skk * C
                if disc < 0:
                    continue
                r = isqrt(disc)
                if r * r != disc:
                    continue
                roots = {-B + r, -B - r}
                xs = [t // skk for t in roots if t % skk == 0]
            elif B:
                xs = [-C // (2 * B)] if C % (2 * B) == 0 else []
            elif C == 0:
                xs = range(k_range[0], k_range[1] + 1)
            else:
                xs = []
            for xk in xs:
                if k_range[0] <= xk <= k_range[1]:
                    v = [0, 0, 0]
                    v[i], v[j], v[k] = xi, xj, xk
                    out.append(tuple(v))
    return out


def _solve_numpy(m, i, j, k, xi_vals, xj_vals, k_range):
    skk = m[k][k]
    lo, hi = k_range
    xj = np.asarray(xj_vals, dtype=np.int64)[None, :]
    rows = max(1, _CHUNK // max(1, xj.size))
    found = []
    xi_all = np.asarray(xi_vals, dtype=np.int64)
    for start in range(0, xi_all.size, rows):
        xi = xi_all[start:start + rows, None]
        B = m[k][i] * xi + m[k][j] * xj
        C = m[i][i] * xi * xi + m[j][j] * xj * xj + 2 * m[i][j] * xi * xj
        XI = np.broadcast_to(xi, B.shape)
        XJ = np.broadcast_to(xj, B.shape)
        if skk:
            disc = B * B - skk * C
            ok = disc >= 0
            d = np.where(ok, disc, 0)
            r = np.floor(np.sqrt(d.astype(np.float64))).astype(np.int64)
            r = np.where(r * r > d, r - 1, r)
            r = np.where((r + 1) * (r + 1) <= d, r + 1, r)
            ok &= r * r == d
            for sgn in (1, -1):
                num = -B + sgn * r
                sel = ok & (num % skk == 0)
                if sgn == -1:
                    sel &= r != 0
                xk = num[sel] // skk
                found.append(np.stack([XI[sel], XJ[sel], xk], axis=1))
        else:
            nz = B != 0
            safe = np.where(nz, 2 * B, 1)
            sel = nz & (C % safe == 0)
            found.append(np.stack([XI[sel], XJ[sel], (-C[sel]) // safe[sel]], axis=1))
            deg = (~nz) & (C == 0)
            if deg.any():
                ks = np.arange(lo, hi + 1, dtype=np.int64)
                a, b = XI[deg], XJ[deg]
                found.append(np.stack([np.repeat(a, ks.size), np.repeat(b, ks.size),
                                       np.tile(ks, a.size)], axis=1))
    if not found:
        return np.zeros((0, 3), dtype=np.int64)
    pts = np.concatenate(found)
    pts = pts[(pts[:, 2] >= lo) & (pts[:, 2] <= hi)]
    out = np.empty_like(pts)
    out[:, i], out[:, j], out[:, k] = pts[:, 0], pts[:, 1], pts[:, 2]
    return out


def _grid_zeros(S, ranges):
    """All integer x with S(x) = 0 and lo_t <= x_t <= hi_t (not filtered for primitivity)."""
    m = S.matrix
    i, j, k = _pick_axes(m, ranges)
    xi_vals = range(ranges[i][0], ranges[i][1] + 1)
    xj_vals = range(ranges[j][0], ranges[j][1] + 1)
    R = [max(abs(lo), abs(hi)) for lo, hi in ranges]
    coef = max(abs(v) for row in m for v in row)
    bound_B = 2 * coef * (R[i] + R[j])
    bound_C = coef * (R[i] + R[j]) ** 2
    bound = bound_B**2 + coef * bound_C + (abs(m[k][k]) + 1) * R[k] + 4 * bound_B * R[k]
    if bound < _INT64_SAFE:
        return [tuple(int(v) for v in row) for row in
                _solve_numpy(m, i, j, k, xi_vals, xj_vals, ranges[k])]
    return _solve_python(m, i, j, k, xi_vals, xj_vals, ranges[k])


def _canonical_sign(x):
    for v in x:
        if v:
            return x if v > 0 else tuple(-t for t in x)
    return x


def find_zero(S, box):
    """First primitive zero with max|x_i| <= box, or None.

    Order: smallest max-norm first, then lexicographic, over vectors whose
    first nonzero coordinate is positive (x and -x are both zeros).
    """
    if is_definite(S):
        return None
    b = 1
    while True:
        b = min(b, box)
        pts = _grid_zeros(S, [(-b, b)] * 3)
        cands = {_canonical_sign(x) for x in pts if any(x) and gcd(*x) == 1}
        if cands:
            return min(cands, key=lambda x: (max(map(abs, x)), x))
        if b >= box:
            return None
        b *= 4


def coordinate_bounds(S, hv, T):
    """Integer boxes containing every real zero with 0 < x.y <= T."""
    Sstar = np.array(adjugate(S), dtype=float)
    y = hv.as_floats()
    sy = float(y @ Sstar @ y)
    if sy <= 0:
        raise SearchError("S*(y) <= 0: the height slice is unbounded")
    T = float(T)
    out = []
    for t in range(3):
        b = float((Sstar @ y)[t])
        disc = max(b * b - sy * Sstar[t, t], 0.0)
        lam_lo, lam_hi = (b - disc**0.5) / sy, (b + disc**0.5) / sy
        lo = min(0.0, T * lam_lo)
        hi = max(0.0, T * lam_hi)
        pad = 1e-9 * (abs(lo) + abs(hi)) + 1e-9
        out.append((int(np.floor(lo - pad)), int(np.ceil(hi + pad))))
    return out


@dataclass
class ZeroList:
    """Primitive zeros with positive height, sorted by height."""

    hv: HeightVector
    points: list = field(default_factory=list)
    keys: list = field(default_factory=list)  # x.Y, proportional to height

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def upto(self, T):
        n = bisect_right(self.keys, self.hv.key_bound(T))
        return ZeroList(self.hv, self.points[:n], self.keys[:n])

    def to_json(self, labels=None):
        out = []
        for idx, x in enumerate(self.points):
            lab = None if labels is None else labels[idx]
            out.append({
                "x": list(x),
                "height": self.hv.height_str(x),
                "orbit": None if lab is None else lab.to_json(),
            })
        return out


def enumerate_zeros(S, hv, T):
    """Every primitive zero x of S with 0 < x.y <= T, sorted by height."""
    if not isinstance(hv, HeightVector):
        hv = HeightVector.for_form(S, hv)
    H = hv.key_bound(T)
    if H <= 0 or is_definite(S):
        return ZeroList(hv)
    ranges = coordinate_bounds(S, hv, T)
    Y, _ = hv.integer_direction()
    keyed = []
    for x in _grid_zeros(S, ranges):
        if gcd(*x) != 1:
            continue
        k = x[0] * Y[0] + x[1] * Y[1] + x[2] * Y[2]
        if 0 < k <= H:
            keyed.append((k, x))
    keyed.sort()
    return ZeroList(hv, [x for _, x in keyed], [k for k, _ in keyed])


def _shell(radius):
    """Vectors with max-norm == radius, first nonzero coordinate positive."""
    rng = range(-radius, radius + 1)
    for x in rng:
        for y in rng:
            for z in rng:
                v = (x, y, z)
                if max(abs(x), abs(y), abs(z)) == radius and _canonical_sign(v) == v:
                    yield v


def _find_witness(pred, boxes=(50, 500)):
    radius = 1
    for box in boxes:
        while radius <= box:
            for v in _shell(radius):
                if pred(v):
                    return v
            radius += 1
    raise SearchError("no witness vector found in the search box")


def smith_isotropy_test(S, inv=None):
    """Legendre-symbol criterion for a zero of a special form with odd D.

    With S^dagger = S*/Omega, an indefinite S is isotropic iff

      (S(x)/p)                      = (-N3 N5 N1 / p)   for p | N4 N2,
      (S^dagger(y)/q)               = ( N3 N4 N2 / q)   for q | N5 N1,
      (S(z)/r) (-S^dagger(z)/r)     = (-N5 N4 N2 N1/r)  for r | N3,

    where x, y, z are any vectors whose values are prime to the modulus.
    Definite forms have no zero and give False.
    """
    inv = inv or factor_invariants(S)
    if not inv.odd:
        raise HypothesisError(f"determinant {inv.D} is even")
    if not inv.special:
        raise HypothesisError("criterion needs the square-free N-factorization")
    if is_definite(S):
        return False
    N1, N2, N3, N4, N5 = inv.ns
    Sd = primitive_adjugate(S)
    m, md = S.matrix, Sd.matrix

    for p in prime_divisors(N4 * N2):
        x = _find_witness(lambda v: quad_value(m, v) % p)
        if legendre(quad_value(m, x), p) != legendre(-N3 * N5 * N1, p):
            return False
    for q in prime_divisors(N5 * N1):
        y = _find_witness(lambda v: quad_value(md, v) % q)
        if legendre(quad_value(md, y), q) != legendre(N3 * N4 * N2, q):
            return False
    for r in prime_divisors(N3):
        z = _find_witness(lambda v: (quad_value(m, v) * quad_value(md, v)) % r)
        lhs = legendre(quad_value(m, z), r) * legendre(-quad_value(md, z), r)
        if lhs != legendre(-N5 * N4 * N2 * N1, r):
            return False
    return True


def is_zero(S, x):
    return len(x) == 3 and any(x) and gcd(*x) == 1 and evaluate(S, x) == 0
