"""Two-mode Gaussian regularisation of the continuous-variable collective bases.

Conventions: hbar = 1, quadratures ordered ``(x1, p1, x2, p2)``, vacuum
covariance ``I/2``. Ideal quadrature eigenstates are replaced by states
squeezed by ``r`` in the collective position quadratures; ``r -> inf`` is the
ideal limit.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import erfcx

from .errors import SingularAngle, UnphysicalCovariance

TWO_PI = 2 * np.pi

OMEGA = np.kron(np.eye(2), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def _validate_cov(cov: np.ndarray, atol: float = 1e-10) -> None:
    if cov.shape != (4, 4):
        raise UnphysicalCovariance(f"expected a 4x4 covariance, got shape {cov.shape}")
    if not np.allclose(cov, cov.T, atol=1e-12, rtol=0):
        raise UnphysicalCovariance("covariance matrix is not symmetric")
    if uncertainty_margin(cov) < -atol:
        raise UnphysicalCovariance("covariance violates cov + i Omega / 2 >= 0")


def uncertainty_margin(cov: np.ndarray) -> float:
    """Smallest eigenvalue of ``cov + i Omega / 2`` (non-negative for physical states)."""
    return float(np.min(np.linalg.eigvalsh(cov + 0.5j * OMEGA)))


@dataclass(frozen=True, eq=False)
class GaussianState:
    cov: np.ndarray
    mean: np.ndarray = field(default_factory=lambda: np.zeros(4))

    def __post_init__(self):
        cov = np.array(self.cov, dtype=float)
        mean = np.array(self.mean, dtype=float)
        _validate_cov(cov)
        if mean.shape != (4,):
            raise ValueError("mean must be a 4-vector")
        cov.setflags(write=False)
        mean.setflags(write=False)
        object.__setattr__(self, "cov", cov)
        object.__setattr__(self, "mean", mean)

    @classmethod
    def vacuum(cls) -> "GaussianState":
        return cls(np.eye(4) / 2)

    def transform(self, s: np.ndarray) -> "GaussianState":
        return GaussianState(s @ self.cov @ s.T, s @ self.mean)

    @property
    def cross_block(self) -> np.ndarray:
        return self.cov[:2, 2:]


@dataclass(frozen=True)
class AngleLabelPair:
    theta: float
    theta_prime: float

    def __post_init__(self):
        object.__setattr__(self, "theta", float(self.theta) % TWO_PI)
        object.__setattr__(self, "theta_prime", float(self.theta_prime) % TWO_PI)


def is_symplectic(s: np.ndarray, atol: float = 1e-10) -> bool:
    return bool(np.allclose(s.T @ OMEGA @ s, OMEGA, atol=atol, rtol=0))


def collective_map() -> np.ndarray:
    """Linear map ``(x1, p1, x2, p2) -> (xi, nu, eta, mu)``.

    ``xi, nu`` are the relative and ``eta, mu`` the centre-of-mass quadratures,
    each the 50/50 difference or sum divided by sqrt(2).
    """
    c = 1 / np.sqrt(2)
    eye = np.eye(2)
    return np.block([[c * eye, -c * eye], [c * eye, c * eye]])


def phase_rotation(theta: float) -> np.ndarray:
    """Phase-space action of ``U^dagger(theta)`` on one mode's ``(x, p)``.

    Chosen so that the rotated position eigenstate is an eigenstate of
    ``cos(theta) x + sin(theta) p``.
    """
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def _block_diag(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros((4, 4))
    out[:2, :2] = a
    out[2:, 2:] = b
    return out


def collective_rotation(theta: float, theta_prime: float) -> np.ndarray:
    """Particle-frame matrix of ``V_A^dagger(theta) V_B^dagger(theta_prime)``."""
    s = collective_map()
    return s.T @ _block_diag(phase_rotation(theta), phase_rotation(theta_prime)) @ s


def particle_rotation(theta1: float, theta2: float) -> np.ndarray:
    """Particle-frame matrix of ``U_1^dagger(theta1) U_2^dagger(theta2)``."""
    return _block_diag(phase_rotation(theta1), phase_rotation(theta2))


def rotate_collective(state: GaussianState, theta: float, theta_prime: float) -> GaussianState:
    return state.transform(collective_rotation(theta, theta_prime))


def regularized_mucb_state(r: float, theta: float, theta_prime: float) -> GaussianState:
    """Finite-squeezing stand-in for ``|xi, theta> |eta, theta'>``.

    Both collective modes start position-squeezed by ``r``; the relative mode
    is rotated by ``theta`` and the centre-of-mass mode by ``theta_prime``.
    """
    if r < 0:
        raise ValueError("squeezing r must be non-negative")
    sq = np.diag([np.exp(-2 * r), np.exp(2 * r)]) / 2
    coll = _block_diag(sq, sq)
    s = collective_map()
    return rotate_collective(GaussianState(s.T @ coll @ s), theta, theta_prime)


def symplectic_eigenvalues(cov: np.ndarray) -> np.ndarray:
    """Sorted symplectic spectrum: moduli of the eigenvalues of ``i Omega cov``."""
    ev = np.abs(np.linalg.eigvals(1j * OMEGA @ cov))
    return np.sort(ev)[::2]


def log_negativity(state: GaussianState) -> float:
    """``max(0, -ln(2 nu_min))`` from the partially transposed covariance."""
    if uncertainty_margin(state.cov) < -1e-10:
        raise UnphysicalCovariance("covariance violates the uncertainty principle")
    flip = np.diag([1.0, 1.0, 1.0, -1.0])
    nu = symplectic_eigenvalues(flip @ state.cov @ flip)[0]
    return max(0.0, float(-np.log(2 * nu)))


def is_product(state: GaussianState, tol: float = 1e-10) -> bool:
    return bool(np.max(np.abs(state.cross_block)) <= tol)


def mean_photon_number(cov: np.ndarray, mean: np.ndarray | None = None) -> float:
    """Total ``<a^dagger a>`` summed over modes."""
    n = 0.5 * (np.trace(cov) - cov.shape[0] / 2)
    if mean is not None:
        n += 0.5 * float(mean @ mean)
    return float(n)


def _check_angle(theta: float) -> float:
    s = np.sin(theta)
    if abs(s) <= 1e-8:
        raise SingularAngle(f"sin(theta) = {s:.3g}; the kernel is a delta function here")
    return s


def quadrature_kernel(x, y, theta: float, literal: bool = False):
    """``<x | y, theta>``: position representation of a rotated quadrature eigenstate.

    The default includes the phase ``sqrt(1 + i cot(theta)) * sqrt(sin(theta))``
    that makes the kernels compose as a one-parameter group; ``literal=True``
    drops it and returns the bare ``(2 pi sin(theta))**-1/2`` prefactor form.
    Both have modulus ``1/sqrt(2 pi |sin(theta)|)`` and reduce to
    ``exp(i x y)/sqrt(2 pi)`` at ``theta = pi/2``.
    """
    s = _check_angle(theta)
    c = np.cos(theta)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    chirp = np.exp(-1j * ((x**2 + y**2) * c - 2 * x * y) / (2 * s))
    if literal:
        pref = 1 / np.sqrt(complex(TWO_PI * s))
    else:
        pref = np.sqrt(complex(1 + 1j * c / s) / TWO_PI)
    return pref * chirp


def _gaussian_tail(a: complex, b: complex, edge: float) -> complex:
    # int_edge^inf exp(-a y^2 + b y) dy, Re a > 0; erfcx keeps large arguments finite
    sa = np.sqrt(a)
    w = sa * edge - b / (2 * sa)
    return 0.5 * np.sqrt(np.pi / a) * np.exp(b * b / (4 * a) - w * w) * erfcx(w)


def kernel_composition_check(
    theta1: float,
    theta2: float,
    regulator: float = 1e-3,
    half_width: float = 12.0,
    grid_points: int = 4096,
    probe: np.ndarray | None = None,
    tail_correction: bool = True,
) -> dict:
    """Compare ``int K(x,y;t1) K(y,z;t2) dy`` with ``K(x,z;t1+t2)`` numerically.

    The integrand carries ``exp(-regulator * y**2)`` and is integrated by the
    trapezoid rule on ``[-half_width, half_width]``. With ``tail_correction``
    the regulated Gaussian-chirp tails beyond the grid are added in closed
    form. ``probe`` holds the ``x`` and ``z`` values tested (default: 5 points
    in [-1, 1]); the largest relative error over all probe pairs is reported.
    """
    s1, s2 = _check_angle(theta1), _check_angle(theta2)
    _check_angle(theta1 + theta2)
    if probe is None:
        probe = np.linspace(-1.0, 1.0, 5)
    y = np.linspace(-half_width, half_width, grid_points)
    damping = np.exp(-regulator * y**2)
    a = regulator + 0.5j * (np.cos(theta1) / s1 + np.cos(theta2) / s2)
    worst = 0.0
    for x in probe:
        for z in probe:
            integrand = quadrature_kernel(x, y, theta1) * quadrature_kernel(y, z, theta2)
            value = np.trapezoid(integrand * damping, y)
            if tail_correction:
                b = 1j * (x / s1 + z / s2)
                scale = quadrature_kernel(x, 0.0, theta1) * quadrature_kernel(0.0, z, theta2)
                value += scale * (_gaussian_tail(a, b, half_width) + _gaussian_tail(a, -b, half_width))
            target = quadrature_kernel(x, z, theta1 + theta2)
            worst = max(worst, abs(value - target) / abs(target))
    return {
        "theta1": float(theta1),
        "theta2": float(theta2),
        "grid_points": int(grid_points),
        "regulator": {
            "type": "gaussian",
            "epsilon": float(regulator),
            "half_width": float(half_width),
            "tail_correction": bool(tail_correction),
            "probe": [float(p) for p in probe],
        },
        "max_rel_error": float(worst),
    }


def sweep_rows(r_values, angles, product_tol: float = 1e-10) -> list[dict]:
    """Rows ``(r, theta, theta_prime, log_negativity, is_product)`` over the grid."""
    rows = []
    for r in r_values:
        for theta in angles:
            for theta_prime in angles:
                st = regularized_mucb_state(r, theta, theta_prime)
                rows.append(
                    {
                        "r": float(r),
                        "theta": float(theta),
                        "theta_prime": float(theta_prime),
                        "log_negativity": log_negativity(st),
                        "is_product": is_product(st, product_tol),
                    }
                )
    return rows
