"""Height functionals x -> x.y with S*(y) = 4D, kept exact.

y is stored as y0 * sqrt(scale2) with y0 rational and scale2 a positive
rational, so a quadratic-surd y costs nothing extra: every height
comparison is reduced to an integer inequality.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

import numpy as np

from .errors import HypothesisError, SearchError
from .exact_linalg import adjugate, determinant, quad_value


def _rational_sqrt(q):
    q = Fraction(q)
    if q < 0:
        return None
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class HeightVector:
    y0: tuple
    scale2: Fraction
    value_check: Fraction  # S*(y) - 4D, always 0 for a valid vector

    @classmethod
    def for_form(cls, S, y, scale2=1):
        """Wrap y (rationals) * sqrt(scale2); requires S*(y) == 4D exactly."""
        y0 = tuple(Fraction(v) for v in y)
        scale2 = Fraction(scale2)
        D = determinant(S)
        if D <= 0:
            raise HypothesisError("height vectors need det(S) > 0")
        check = scale2 * quad_value(adjugate(S), y0) - 4 * D
        if check != 0:
            raise ValueError(f"S*(y) != 4D (off by {check})")
        return cls(y0, scale2, check)

    @property
    def is_rational(self):
        return _rational_sqrt(self.scale2) is not None

    @property
    def y(self):
        """Exact rational y, or None for a surd."""
        r = _rational_sqrt(self.scale2)
        return None if r is None else tuple(v * r for v in self.y0)

    def integer_direction(self):
        """(Y, L) with Y integral and y0 = Y / L."""
        L = lcm(*(v.denominator for v in self.y0))
        return tuple(int(v * L) for v in self.y0), L

    def as_floats(self):
        return np.array([float(v) for v in self.y0]) * float(self.scale2) ** 0.5

    def key_bound(self, T):
        """Largest integer H with: 0 < x.Y <= H  <=>  0 < x.y <= T."""
        T = Fraction(T)
        if T <= 0:
            return 0
        _, L = self.integer_direction()
        q = T * T * L * L / self.scale2
        return isqrt(q.numerator * q.denominator) // q.denominator

    def key(self, x):
        Y, _ = self.integer_direction()
        return sum(a * b for a, b in zip(x, Y))

    def height(self, x):
        """Exact height: a Fraction, or (h0, scale2) meaning h0*sqrt(scale2)."""
        h0 = sum(a * b for a, b in zip(x, self.y0))
        r = _rational_sqrt(self.scale2)
        return h0 * r if r is not None else (h0, self.scale2)

    def height_str(self, x):
        h = self.height(x)
        if isinstance(h, Fraction):
            return str(h)
        return f"{h[0]}*sqrt({h[1]})"

    def height_float(self, x):
        return float(sum(Fraction(a) * b for a, b in zip(x, self.y0))) * float(self.scale2) ** 0.5

    def to_json(self):
        return {
            "y0": [str(v) for v in self.y0],
            "scale2": str(self.scale2),
            "y": None if self.y is None else [str(v) for v in self.y],
        }


def _small_vectors(radius):
    vals = sorted(range(-radius, radius + 1), key=lambda v: (abs(v), v < 0))
    out = []
    for x in vals:
        for y in vals:
            for z in vals:
                v = (x, y, z)
                if any(v):
                    out.append(v)
    out.sort(key=lambda v: (sum(map(abs, v)), max(map(abs, v))))
    return out


def make_height_vector(S, radius=3):
    """Deterministic y with S*(y) = 4D.

    Scans axis vectors first, then small integer combinations y0 with
    S*(y0) > 0, then vectors S w with S(w) > 0, and takes the first whose
    scaling factor 4D/S*(y0) is a rational square; if none is, the first
    admissible y0 is kept as a quadratic surd.
    """
    D = determinant(S)
    if D <= 0:
        raise HypothesisError("height vectors need det(S) > 0")
    Sstar = adjugate(S)
    m = S.matrix
    small = _small_vectors(radius)
    # y0 = S w with S(w) > 0 has S*(y0) = D S(w) > 0, so these always succeed
    extra = [tuple(sum(m[i][j] * w[j] for j in range(3)) for i in range(3))
             for w in small if quad_value(m, w) > 0]
    first = None
    for y0 in small + extra:
        val = quad_value(Sstar, y0)
        if val <= 0:
            continue
        s = Fraction(4 * D, val)
        r = _rational_sqrt(s)
        if r is not None:
            return HeightVector.for_form(S, [v * r for v in y0])
        if first is None:
            first = (y0, s)
    if first is None:
        raise SearchError("no vector with S*(y) > 0 found; supply y explicitly")
    return HeightVector.for_form(S, first[0], first[1])
