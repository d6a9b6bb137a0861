# How the zeros of -27x^2 + y^2 - z^2 split among its three orbits as the height grows.
from ternary_orbits import HeightVector, Form, density_report

S = Form.diagonal(-27, 1, -1)
hv = HeightVector.for_form(S, (0, 2, 0))  # height of x is 2|x2|
rep = density_report(S, hv, (1250, 2500, 5000, 10000, 20000))

print(f"{'T':>7} " + " ".join(f"{str(lab):>10}" for lab in rep.labels) + "   total")
for i, T in enumerate(rep.schedule):
    shares = [rep.counts[lab][i] / rep.totals[i] for lab in rep.labels]
    print(f"{str(T):>7} " + " ".join(f"{s:>10.4f}" for s in shares) + f"  {rep.totals[i]:>6}")
print("expected shares: 3/5 for (1,27,0) and 1/5 for each (3,3,c)")
