"""Continuous-variable collective bases with finite squeezing.

Log-negativity of the regularised state |xi, theta>|eta, theta'> vanishes only
when theta' - theta is a multiple of pi and grows with squeezing elsewhere.
"""
import numpy as np

from mucb.gaussian_cv import is_product, log_negativity, regularized_mucb_state

angles = np.arange(0, 13) * np.pi / 12
print("delta/pi " + " ".join(f"{a / np.pi:5.2f}" for a in angles))
for r in (0.25, 0.5, 1.0, 2.0):
    en = [log_negativity(regularized_mucb_state(r, 0.0, a)) for a in angles]
    print(f"r={r:4.2f}   " + " ".join(f"{e:5.2f}" for e in en))

st = regularized_mucb_state(1.0, 0.0, np.pi / 2)
print("EPR-type state covariance (r=1):\n", np.round(st.cov, 4))
print("product at theta' = theta + pi:", is_product(regularized_mucb_state(1.0, 0.3, 0.3 + np.pi)))

# Near delta = pi the entanglement at large squeezing stays large, then drops to zero exactly at pi.
for eps in (0.1, 0.01, 0.0):
    print(f"r=3, delta=pi-{eps}: E_N = {log_negativity(regularized_mucb_state(3.0, 0, np.pi - eps)):.4f}")
