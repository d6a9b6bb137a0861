# The genus of diag(289,-17,-1): orbit labels, their classes and the counting constant.
from ternary_orbits import Form, HeightVector, density_report, factor_invariants, fit_kappa, genus_orbit_sum, kappa

S = Form.diagonal(289, -17, -1)
inv = factor_invariants(S)

part = genus_orbit_sum(S)
print("admissible labels:", part.admissible)
print("classes:", part.classes)
print("total", part.total, "expected", part.expected_total, "verified", part.verified)

# each orbit grows linearly in the height, all at the same rate
hv = HeightVector.for_form(S, (34, 0, 0))
rep = density_report(S, hv, (6250, 12500, 25000, 50000), inv)
fit = fit_kappa(rep)
k = float(kappa(inv, h=2))
for lab, s in fit.slopes.items():
    print(f"label {lab}: slope {s:.6f}  ({s / k:.3f} x kappa)")
print(f"kappa = {k:.6f}")
