# Invariants of a few ternary forms, and how they survive a change of basis.
import random

from ternary_orbits import Form, congruence_transform, factor_invariants, primitive_adjugate
from ternary_orbits.exact_linalg import random_unimodular

forms = {
    "diag(289,-17,-1)": Form.diagonal(289, -17, -1),
    "diag(-27,1,-1)": Form.diagonal(-27, 1, -1),
    "x^2 - y^2 - z^2": Form.diagonal(1, -1, -1),
}

for name, S in forms.items():
    inv = factor_invariants(S)
    print(name)
    print("  D, Omega, Delta, N =", inv.D, inv.Omega, inv.Delta, inv.N)
    print("  N1..N5 =", inv.ns, " special:", inv.special)
    print("  primitive adjugate:", primitive_adjugate(S).matrix)

# scramble one of them; every invariant stays put
rng = random.Random(1)
U = random_unimodular(rng, steps=5)
S = congruence_transform(forms["diag(289,-17,-1)"], U)
print()
print("scrambled:", S)
print("same invariants:", factor_invariants(S) == factor_invariants(forms["diag(289,-17,-1)"]))
