"""Single-qudit mutually unbiased bases for a prime dimension.

Builds the d+1 bases, checks that every cross overlap has modulus 1/sqrt(d),
and confirms each state is an eigenvector of X Z^b.
"""
import itertools

import numpy as np

from mucb.qudit_mub import eigen_residual, full_mub_set, mub_state, xz_power

d = 5
bases = full_mub_set(d)
print(f"d = {d}: {len(bases)} bases, labels {[b.label for b in bases]}")

# The overlap matrix between two different bases is flat: every entry has modulus 1/sqrt(d).
overlaps = np.abs(bases[1].vectors.conj() @ bases[3].vectors.T)
print("overlap moduli, b=1 vs b=3:\n", np.round(overlaps, 6))

worst = 0.0
for a, b in itertools.combinations(bases, 2):
    worst = max(worst, np.abs(np.abs(a.vectors.conj() @ b.vectors.T) - d**-0.5).max())
print(f"largest deviation from 1/sqrt({d}) over all pairs: {worst:.2e}")

# Eigen-equation: X Z^b |m;b> = lambda |m;b>, |lambda| = 1.
for b in range(d):
    res, lam = eigen_residual(xz_power(d, b), mub_state(d, b, 2))
    print(f"b={b}: residual {res:.1e}, eigenvalue phase {np.angle(lam) / (2 * np.pi) * d:+.3f} x 2pi/d")
