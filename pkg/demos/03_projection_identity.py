"""Measuring particle 1 of |nbar1>>|nbar2, b>> leaves particle 2 in a definite state.

The residual amplitude is checked against the closed form for both exponent
conventions of the collective MUB states, n(n-1) and n(n+1).
"""
from mucb.collective import projection_check, projection_sweep

r = projection_check(5, nbar1=2, nbar2=1, b=3, n1=4)
print(f"<n1=4| on |2>>|1,b=3>>: support n2={r.n2}, amplitude {r.amplitude:.6f}, expected {r.expected:.6f}")

for d in (3, 5, 7):
    for sign, name in ((-1, "n(n-1)"), (1, "n(n+1)")):
        res = projection_sweep(d, sign=sign)
        print(f"d={d} {name}: {res['mismatches']} mismatches out of {res['checks']}")
