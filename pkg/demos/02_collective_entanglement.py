"""Product states in collective coordinates that are maximally entangled in particles.

A two-qudit basis state |n1>|n2> is also a product |nbar1>>|nbar2>> in the
relative / centre-of-mass labels. Swapping either collective factor for a
vector of another MUB gives a maximally entangled state unless both factors
use the same basis label.
"""
from collections import Counter

import numpy as np

from mucb.collective import classify_pairs, entanglement_report, mucb_state, to_collective
from mucb.qudit_mub import COMPUTATIONAL

d = 3
idx = to_collective(d, 2, 1)
print(f"|2>|1> has collective labels nbar1={idx.nbar1.value}, nbar2={idx.nbar2.value}")

psi = mucb_state(d, 0, COMPUTATIONAL, 0, 1)
rep = entanglement_report(psi)
print("amplitude matrix |<n1 n2|psi>|:\n", np.round(np.abs(psi.reshape(d, d)), 4))
print(f"entropy {rep.entropy_nats:.12f} nats vs ln {d} = {np.log(d):.12f} -> {rep.classification}")

for d in (3, 5, 7):
    rows = classify_pairs(d, nbar_pairs=[(0, 0), (1, 2)])
    counts = Counter(r.classification for r in rows)
    products = [(r.b1, r.b2) for r in rows if r.classification == "Product"]
    print(f"d={d}: {dict(counts)}; product label pairs: {products}")
