"""Clock/shift operators and the d+1 mutually unbiased bases of a prime qudit.

Bases are labelled by an integer ``b`` in ``0..d-1`` (eigenbasis of X Z^b) or by
:data:`COMPUTATIONAL`. States are plain complex numpy vectors; a basis stores
its vectors as the rows of a ``(d, d)`` array.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DimensionMismatch
from .prime_field import FieldElement, half, require_prime

COMPUTATIONAL = "comp"

Label = Union[int, str]
Index = Union[int, FieldElement]


def omega(d: int) -> complex:
    return np.exp(2j * np.pi / d)


def phase(k: int, d: int) -> complex:
    """``omega**k`` for an exact residue ``k``, evaluated without accumulated drift."""
    return np.exp(2j * np.pi * (int(k) % d) / d)


def pauli_z(d: int) -> np.ndarray:
    """Clock operator ``Z|n> = omega**n |n>``."""
    if d < 2:
        raise ValueError("d must be at least 2")
    return np.diag([phase(n, d) for n in range(d)])


def pauli_x(d: int) -> np.ndarray:
    """Cyclic shift ``X|n> = |n+1 mod d>``."""
    if d < 2:
        raise ValueError("d must be at least 2")
    return np.roll(np.eye(d, dtype=complex), 1, axis=0)


def xz_power(d: int, b: int) -> np.ndarray:
    """The unitary ``X Z**b`` whose eigenbasis is MUB number ``b``."""
    return pauli_x(d) @ np.linalg.matrix_power(pauli_z(d), int(b) % d)


def _residue(value: Index, d: int) -> int:
    if isinstance(value, FieldElement):
        if value.modulus != d:
            raise DimensionMismatch(f"index is mod {value.modulus}, expected mod {d}")
        return value.value
    return int(value) % d


def mub_exponents(d: int, b: Index, m: Index, sign: int = -1) -> np.ndarray:
    """Exponents ``k_n = (b/2) n (n + sign) - n m`` in Z_d for ``n = 0..d-1``.

    ``sign=-1`` gives the single-qudit form ``n(n-1)``; ``sign=+1`` the
    ``n(n+1)`` form used for collective states.
    """
    if sign not in (-1, 1):
        raise ValueError("sign must be +1 or -1")
    d = require_prime(d, allow_two=False)
    h = half(d).value
    b, m = _residue(b, d), _residue(m, d)
    n = np.arange(d)
    return (h * b * n * (n + sign) - n * m) % d


def mub_state(d: int, b: Index, m: Index, sign: int = -1) -> np.ndarray:
    """State ``|m; b>`` expanded in the computational basis.

    Examples
    --------
    >>> np.allclose(mub_state(3, 0, 0), np.ones(3) / np.sqrt(3))
    True
    """
    k = mub_exponents(d, b, m, sign)
    return np.exp(2j * np.pi * k / d) / np.sqrt(d)


@dataclass(frozen=True, eq=False)
class MubBasis:
    """One basis of the complete MUB set; ``vectors[m]`` is the m-th state."""

    d: int
    label: Label
    vectors: np.ndarray

    def __post_init__(self):
        self.vectors.setflags(write=False)

    def __len__(self) -> int:
        return self.d

    def __iter__(self):
        return iter(self.vectors)

    def gram(self) -> np.ndarray:
        return self.vectors.conj() @ self.vectors.T

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "label": self.label,
            "vectors": [[[float(z.real), float(z.imag)] for z in v] for v in self.vectors],
        }


def mub_basis(d: int, b: Label, sign: int = -1) -> MubBasis:
    d = require_prime(d, allow_two=False)
    if b == COMPUTATIONAL:
        return MubBasis(d, COMPUTATIONAL, np.eye(d, dtype=complex))
    b = int(b) % d
    vectors = np.array([mub_state(d, b, m, sign) for m in range(d)])
    return MubBasis(d, b, vectors)


def full_mub_set(d: int, sign: int = -1) -> list[MubBasis]:
    """The d bases ``b = 0..d-1`` followed by the computational basis."""
    d = require_prime(d, allow_two=False)
    return [mub_basis(d, b, sign) for b in range(d)] + [mub_basis(d, COMPUTATIONAL)]


def verify_unbiased(
    basis_a: MubBasis, basis_b: MubBasis, tol: float = 1e-10
) -> tuple[bool, float]:
    """Check that all cross overlaps have modulus ``1/sqrt(d)``.

    Returns the verdict and the largest absolute deviation from ``1/sqrt(d)``.
    """
    if basis_a.d != basis_b.d:
        raise DimensionMismatch(f"bases of dimension {basis_a.d} and {basis_b.d}")
    overlaps = np.abs(basis_a.vectors.conj() @ basis_b.vectors.T)
    deviation = float(np.max(np.abs(overlaps - 1 / np.sqrt(basis_a.d))))
    return deviation <= tol, deviation


def eigen_residual(op: np.ndarray, v: np.ndarray) -> tuple[float, complex]:
    """Residual ``||op v - lam v||`` with ``lam`` the Rayleigh quotient."""
    w = op @ v
    lam = np.vdot(v, w) / np.vdot(v, v)
    return float(np.linalg.norm(w - lam * v)), complex(lam)
