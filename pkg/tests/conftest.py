from math import gcd

from hypothesis import strategies as st

from ternary_orbits.exact_linalg import Form, random_unimodular
from ternary_orbits.acceptance import DIAG27, LEGENDRE_17

S1 = Form(0, -3, 0, 0, 1, 3)  # [[0,0,3],[0,-3,1],[3,1,0]]
NAMED = {"diag27": DIAG27, "legendre_17": LEGENDRE_17, "triple_s1": S1}


@st.composite
def primitive_vectors(draw, bound=1000):
    x = draw(st.tuples(*[st.integers(-bound, bound)] * 3).filter(any))
    g = gcd(*x)
    return tuple(v // g for v in x)


@st.composite
def unimodulars(draw, proper=True):
    import random

    seed = draw(st.integers(0, 2**32))
    steps = draw(st.integers(1, 6))
    return random_unimodular(random.Random(seed), steps=steps, max_mult=2, proper=proper)
