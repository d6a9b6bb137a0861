"""Exact 3x3 integer linear algebra for ternary quadratic forms.

Matrices are tuples of row tuples of Python ints, so every operation is
exact regardless of size.  A form (a, b, c, d, e, f) stands for

    a*x1^2 + b*x2^2 + c*x3^2 + 2d*x1*x2 + 2e*x2*x3 + 2f*x1*x3

i.e. the symmetric matrix [[a, d, f], [d, b, e], [f, e, c]].
"""

from dataclasses import dataclass
from math import gcd

from .arith import content, ext_gcd

IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def mat(rows):
    return tuple(tuple(int(v) for v in row) for row in rows)


def transpose(m):
    return tuple(zip(*m))


def matmul(m, n):
    cols = transpose(n)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in m)


def det3(m):
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def adj3(m):
    """Classical adjugate: adj(m) @ m == det(m) * I."""
    (a, b, c), (d, e, f), (g, h, i) = m
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


def scale(m, k):
    return tuple(tuple(k * v for v in row) for row in m)


def exact_div(m, k):
    out = []
    for row in m:
        new_row = []
        for v in row:
            q, r = divmod(v, k)
            if r:
                raise ArithmeticError(f"{v} is not divisible by {k}")
            new_row.append(q)
        out.append(tuple(new_row))
    return tuple(out)


def mat_content(m):
    return content(v for row in m for v in row)


def mat_pow(m, k):
    """Integer power of a unimodular matrix; negative k uses the exact inverse."""
    if k < 0:
        d = det3(m)
        if d not in (1, -1):
            raise ValueError("negative powers need a unimodular matrix")
        m = scale(adj3(m), d)
        k = -k
    out = IDENTITY
    while k:
        if k & 1:
            out = matmul(out, m)
        m = matmul(m, m)
        k >>= 1
    return out


def is_symmetric(m):
    return all(m[i][j] == m[j][i] for i in range(3) for j in range(3))


def quad_value(m, x):
    return sum(m[i][j] * x[i] * x[j] for i in range(3) for j in range(3))


def bilinear(m, x, y):
    return sum(m[i][j] * x[i] * y[j] for i in range(3) for j in range(3))


@dataclass(frozen=True)
class Form:
    """Primitive nonsingular integral ternary quadratic form."""

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def __post_init__(self):
        for name in "abcdef":
            object.__setattr__(self, name, int(getattr(self, name)))
        if content(self.coefficients) != 1:
            raise ValueError(f"form {self.coefficients} is not primitive")
        if det3(self.matrix) == 0:
            raise ValueError(f"form {self.coefficients} is singular")

    @classmethod
    def from_matrix(cls, m):
        m = mat(m)
        if not is_symmetric(m):
            raise ValueError("matrix is not symmetric")
        return cls(m[0][0], m[1][1], m[2][2], m[0][1], m[1][2], m[0][2])

    @classmethod
    def diagonal(cls, a, b, c):
        return cls(a, b, c, 0, 0, 0)

    @classmethod
    def parse(cls, text):
        """Parse the six-integer string "a,b,c,d,e,f"."""
        parts = [p.strip() for p in text.replace("−", "-").split(",")]
        if len(parts) != 6:
            raise ValueError(f"expected six comma-separated integers, got {text!r}")
        return cls(*(int(p) for p in parts))

    @property
    def coefficients(self):
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    @property
    def matrix(self):
        return (
            (self.a, self.d, self.f),
            (self.d, self.b, self.e),
            (self.f, self.e, self.c),
        )

    def __call__(self, x):
        return evaluate(self, x)

    def __str__(self):
        return ",".join(str(v) for v in self.coefficients)


@dataclass(frozen=True)
class Unimodular:
    """3x3 integer matrix with determinant +1 or -1."""

    rows: tuple

    def __post_init__(self):
        rows = mat(self.rows)
        object.__setattr__(self, "rows", rows)
        if det3(rows) not in (1, -1):
            raise ValueError(f"matrix {rows} is not unimodular")

    @property
    def det(self):
        return det3(self.rows)

    @property
    def proper(self):
        return self.det == 1

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def inverse(self):
        return Unimodular(scale(adj3(self.rows), self.det))

    def __matmul__(self, other):
        return Unimodular(matmul(self.rows, other.rows))

    def tolist(self):
        return [list(row) for row in self.rows]


UNIT = Unimodular(IDENTITY)


def _as_matrix(S):
    return S.matrix if isinstance(S, Form) else mat(S)


def _as_rows(A):
    return A.rows if isinstance(A, Unimodular) else mat(A)


def determinant(S):
    return det3(_as_matrix(S))


def adjugate(S):
    """S* = det(S) S^{-1}, as an exact integer matrix (generally not primitive)."""
    return adj3(_as_matrix(S))


def transform_matrix(S, A):
    """A^t S A on raw matrices."""
    m, a = _as_matrix(S), _as_rows(A)
    return matmul(matmul(transpose(a), m), a)


def congruence_transform(S, A):
    """The form S[A] = A^t S A."""
    return Form.from_matrix(transform_matrix(S, A))


def evaluate(S, x):
    return quad_value(_as_matrix(S), x)


def is_primitive_vector(x):
    return len(x) == 3 and content(x) == 1


def complete_to_unimodular(x):
    """Return M in SL3(Z) whose first column is x (x primitive).

    Built from two Bezout steps: (x1, x2) -> (g, 0), then (g, x3) -> (1, 0).
    """
    x1, x2, x3 = (int(v) for v in x)
    if not is_primitive_vector((x1, x2, x3)):
        raise ValueError(f"{x} is not a primitive vector")
    g1, p, q = ext_gcd(x1, x2)
    if g1 == 0:
        s = x3  # x = (0, 0, +-1)
        return Unimodular(((0, 1, 0), (0, 0, s), (s, 0, 0)))
    g, r, s = ext_gcd(g1, x3)
    assert g == 1
    rows = (
        (x1, -q, -s * x1 // g1),
        (x2, p, -s * x2 // g1),
        (x3, 0, r),
    )
    M = Unimodular(rows)
    if M.det == -1:
        M = Unimodular(tuple((r0, r1, -r2) for r0, r1, r2 in rows))
    return M


def random_unimodular(rng, steps=6, max_mult=2, proper=True):
    """Random product of elementary matrices (a test and corpus helper)."""
    m = [list(r) for r in IDENTITY]
    for _ in range(steps):
        i, j = rng.sample(range(3), 2)
        k = rng.choice([v for v in range(-max_mult, max_mult + 1) if v])
        for row in m:
            row[j] += k * row[i]
    if not proper and rng.random() < 0.5:
        for row in m:
            row[0] = -row[0]
    return Unimodular(m)


def primitive_part(x):
    g = gcd(*x) if any(x) else 0
    return tuple(v // g for v in x) if g else tuple(x)
