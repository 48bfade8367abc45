"""Position representation of rotated quadrature eigenstates.

The kernel has constant modulus 1/sqrt(2 pi |sin theta|) and composes over
angles; the composition is checked by regulated numerical quadrature.
"""
import numpy as np

from mucb.gaussian_cv import kernel_composition_check, quadrature_kernel

x = np.linspace(-2, 2, 5)
print("|K(x, 0.5; pi/3)| =", np.round(np.abs(quadrature_kernel(x, 0.5, np.pi / 3)), 6))
print("expected           ", round(1 / np.sqrt(2 * np.pi * np.sin(np.pi / 3)), 6))

for t1, t2 in ((np.pi / 6, np.pi / 6), (np.pi / 4, np.pi / 3), (np.pi / 3, np.pi / 3)):
    with_tails = kernel_composition_check(t1, t2)["max_rel_error"]
    grid_only = kernel_composition_check(t1, t2, tail_correction=False)["max_rel_error"]
    print(f"theta1={t1:.3f} theta2={t2:.3f}: rel. error {with_tails:.2e} (grid only: {grid_only:.2e})")
