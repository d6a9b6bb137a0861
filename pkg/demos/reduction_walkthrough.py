# Carry a zero of a special form to the canonical shape and read off its label.
import random

from ternary_orbits import build_canonical, congruence_transform, factor_invariants, reduce_special, reduce_to_triple
from ternary_orbits.exact_linalg import Form, random_unimodular, transform_matrix

S = Form(0, -3, 0, 0, 1, 3)
tri = reduce_to_triple(S, (1, 0, 0))
print("form", S, "at (1,0,0) -> (a, b, c, d) =", (tri.a, tri.b, tri.c, tri.d))

inv = factor_invariants(Form.diagonal(289, -17, -1))
S3 = build_canonical(inv, 5)
print("\ncanonical form with label 5:", S3.matrix)

U = random_unimodular(random.Random(3), steps=4)
S = congruence_transform(S3, U)
x = U.inverse().column(0)
print("hidden in", S, "with zero", x)

can = reduce_special(S, x, inv)
print("recovered label:", can.ell)
print("transform:", can.transform.rows, "det", can.transform.det)
print("S[A] == canonical:", transform_matrix(S, can.transform) == S3.matrix)
