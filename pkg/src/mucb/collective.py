"""Collective (relative / centre-of-mass) coordinates for two prime qudits.

Two-particle states are length ``d**2`` vectors indexed by ``n1 * d + n2``.
The collective labels are ``nbar1 = (n1 - n2)/2`` (relative) and
``nbar2 = (n1 + n2)/2`` (centre of mass), with 1/2 taken in Z_d.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .errors import ClassificationNotConstant, DimensionMismatch
from .prime_field import FieldElement, half, require_prime
from .qudit_mub import COMPUTATIONAL, Label, mub_state, pauli_x, pauli_z, phase

PRODUCT = "Product"
ENTANGLED = "Entangled"
MAXIMALLY_ENTANGLED = "MaximallyEntangled"

CLASS_TOL = 1e-9


@dataclass(frozen=True)
class CollectiveIndex:
    nbar1: FieldElement
    nbar2: FieldElement


def to_collective(d: int, n1: int, n2: int) -> CollectiveIndex:
    d = require_prime(d, allow_two=False)
    h = half(d)
    a, b = FieldElement.of(n1, d), FieldElement.of(n2, d)
    return CollectiveIndex(h * (a - b), h * (a + b))


def from_collective(d: int, nbar1: int, nbar2: int) -> tuple[int, int]:
    d = require_prime(d, allow_two=False)
    a, c = FieldElement.of(int(nbar1), d), FieldElement.of(int(nbar2), d)
    return (a + c).value, (c - a).value


def _on_particle(op: np.ndarray, particle: int) -> np.ndarray:
    eye = np.eye(op.shape[0], dtype=complex)
    return np.kron(op, eye) if particle == 1 else np.kron(eye, op)


def _power(op: np.ndarray, k: int, d: int) -> np.ndarray:
    # op**d == 1 for the clock and shift, so negative powers reduce mod d
    return np.linalg.matrix_power(op, int(k) % d)


def particle_z(d: int, i: int) -> np.ndarray:
    return _on_particle(pauli_z(d), i)


def particle_x(d: int, i: int) -> np.ndarray:
    return _on_particle(pauli_x(d), i)


def barred_z(d: int, i: int) -> np.ndarray:
    """``Zbar_1 = Z_1^(1/2) Z_2^(-1/2)`` and ``Zbar_2 = Z_1^(1/2) Z_2^(1/2)``."""
    d = require_prime(d, allow_two=False)
    h = half(d).value
    z1, z2 = particle_z(d, 1), particle_z(d, 2)
    sign = -1 if i == 1 else 1
    return _power(z1, h, d) @ _power(z2, sign * h, d)


def barred_x(d: int, i: int) -> np.ndarray:
    """``Xbar_1 = X_1 X_2^-1`` and ``Xbar_2 = X_1 X_2``."""
    d = require_prime(d, allow_two=False)
    x1, x2 = particle_x(d, 1), particle_x(d, 2)
    sign = -1 if i == 1 else 1
    return x1 @ _power(x2, sign, d)


def collective_basis_state(d: int, nbar1: int, nbar2: int) -> np.ndarray:
    """The product ``|n1>|n2>`` carrying collective labels ``(nbar1, nbar2)``."""
    n1, n2 = from_collective(d, nbar1, nbar2)
    psi = np.zeros(d * d, dtype=complex)
    psi[n1 * d + n2] = 1.0
    return psi


def _collective_factor(d: int, nbar: int, b: Label, sign: int) -> np.ndarray:
    if b == COMPUTATIONAL:
        v = np.zeros(d, dtype=complex)
        v[int(nbar) % d] = 1.0
        return v
    return mub_state(d, int(b), int(nbar), sign)


def from_collective_amplitudes(amps: np.ndarray) -> np.ndarray:
    """Map a ``(d, d)`` array over ``(nbar1, nbar2)`` to a particle-basis vector."""
    d = amps.shape[0]
    a, c = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
    psi = np.zeros(d * d, dtype=complex)
    psi[((a + c) % d) * d + (c - a) % d] = amps
    return psi


def mucb_state(
    d: int, nbar1: int, b1: Label, nbar2: int, b2: Label, sign: int = 1
) -> np.ndarray:
    """Collective product state ``|nbar1, b1>> |nbar2, b2>>`` in the particle basis.

    Each collective factor is the MUB vector with index ``nbar`` in basis ``b``
    (or the basis vector itself for :data:`COMPUTATIONAL`). ``sign=+1`` uses the
    ``nbar(nbar+1)`` exponent, ``sign=-1`` the ``n(n-1)`` single-qudit form.
    """
    d = require_prime(d, allow_two=False)
    f1 = _collective_factor(d, nbar1, b1, sign)
    f2 = _collective_factor(d, nbar2, b2, sign)
    return from_collective_amplitudes(np.outer(f1, f2))


def amplitude_matrix(state: np.ndarray) -> np.ndarray:
    d = int(round(np.sqrt(state.size)))
    if d * d != state.size:
        raise DimensionMismatch(f"state of length {state.size} is not d**2")
    return state.reshape(d, d)


def reduced_density(state: np.ndarray, keep: int = 2) -> np.ndarray:
    """Reduced density matrix of particle ``keep`` (1 or 2)."""
    m = amplitude_matrix(state)
    if keep == 1:
        return m @ m.conj().T
    if keep == 2:
        return m.T @ m.conj()
    raise ValueError("keep must be 1 or 2")


def trace_distance(rho: np.ndarray, sigma: np.ndarray) -> float:
    return 0.5 * float(np.sum(np.abs(np.linalg.eigvalsh(rho - sigma))))


@dataclass(frozen=True)
class EntanglementReport:
    schmidt_coefficients: np.ndarray
    entropy_nats: float
    reduced_trace_distance_to_maximally_mixed: float
    classification: str

    @property
    def schmidt_rank(self) -> int:
        return int(np.sum(self.schmidt_coefficients > 1e-12))

    @property
    def entropy_bits(self) -> float:
        return self.entropy_nats / np.log(2)


def classify_entropy(entropy: float, d: int, tol: float = CLASS_TOL) -> str:
    if entropy < tol:
        return PRODUCT
    if abs(entropy - np.log(d)) < tol:
        return MAXIMALLY_ENTANGLED
    return ENTANGLED


def entanglement_report(state: np.ndarray, tol: float = CLASS_TOL) -> EntanglementReport:
    m = amplitude_matrix(state)
    d = m.shape[0]
    s = np.linalg.svd(m, compute_uv=False)
    p = s**2
    nz = p[p > 1e-300]
    entropy = max(0.0, float(-np.sum(nz * np.log(nz))))
    rho = reduced_density(state, keep=2)
    dist = trace_distance(rho, np.eye(d) / d)
    return EntanglementReport(s, entropy, dist, classify_entropy(entropy, d, tol))


@dataclass(frozen=True)
class ProjectionResult:
    match: bool
    amplitude: complex
    expected: complex
    n2: int
    support_ok: bool


def projection_expected(d: int, nbar1: int, nbar2: int, b: int, n1: int) -> tuple[int, complex]:
    """Closed form for ``<n1| nbar1>> |nbar2, b>>``: the surviving ``n2`` and its amplitude.

    ``n2 = n1 - 2 nbar1`` and amplitude
    ``omega**((b/2)(n1-nbar1)(n1-nbar1-1) - nbar2 (n1-nbar1)) / sqrt(d)``.
    """
    h = half(d).value
    k = (n1 - nbar1) % d
    exponent = (h * b * k * (k - 1) - nbar2 * k) % d
    return (n1 - 2 * nbar1) % d, phase(exponent, d) / np.sqrt(d)


def projection_check(
    d: int, nbar1: int, nbar2: int, b: int, n1: int, sign: int = -1, tol: float = 1e-10
) -> ProjectionResult:
    """Project the first particle of ``|nbar1>>|nbar2, b>>`` onto ``<n1|``.

    The residual particle-2 vector must be supported on the single predicted
    ``n2``, with amplitude equal to :func:`projection_expected`.
    """
    d = require_prime(d, allow_two=False)
    state = mucb_state(d, nbar1, COMPUTATIONAL, nbar2, b, sign=sign)
    row = amplitude_matrix(state)[n1 % d]
    n2, expected = projection_expected(d, nbar1, nbar2, b, n1)
    off = np.delete(row, n2)
    support_ok = bool(np.all(np.abs(off) < tol))
    amplitude = complex(row[n2])
    match = support_ok and abs(amplitude - expected) < tol
    return ProjectionResult(match, amplitude, complex(expected), n2, support_ok)


def projection_sweep(d: int, sign: int = -1, tol: float = 1e-10) -> dict:
    """Run :func:`projection_check` over all ``d**4`` tuples for one exponent variant."""
    d = require_prime(d, allow_two=False)
    mismatches = 0
    checks = 0
    for nbar1, nbar2, b, n1 in itertools.product(range(d), repeat=4):
        checks += 1
        if not projection_check(d, nbar1, nbar2, b, n1, sign=sign, tol=tol).match:
            mismatches += 1
    return {"d": d, "sign": sign, "checks": checks, "mismatches": mismatches}


@dataclass(frozen=True)
class PairClass:
    d: int
    b1: Label
    b2: Label
    classification: str
    entropy_nats: float
    schmidt: np.ndarray = field(repr=False)


def labels(d: int) -> list[Label]:
    return [COMPUTATIONAL] + list(range(d))


def classify_pairs(
    d: int,
    nbar_pairs: Optional[Iterable[tuple[int, int]]] = None,
    sign: int = 1,
    tol: float = CLASS_TOL,
) -> list[PairClass]:
    """Classify every collective label pair ``(b1, b2)``.

    For each pair the class is computed at every ``(nbar1, nbar2)`` in
    ``nbar_pairs`` (all ``d**2`` by default) and must not vary; otherwise
    :class:`ClassificationNotConstant` is raised. Rows are ordered with the
    computational label first.
    """
    d = require_prime(d, allow_two=False)
    pairs = list(nbar_pairs) if nbar_pairs is not None else list(
        itertools.product(range(d), repeat=2)
    )
    if not pairs:
        raise ValueError("need at least one (nbar1, nbar2) pair")
    rows = []
    for b1, b2 in itertools.product(labels(d), repeat=2):
        reports = [
            entanglement_report(mucb_state(d, n1, b1, n2, b2, sign=sign), tol)
            for n1, n2 in pairs
        ]
        classes = {r.classification for r in reports}
        if len(classes) != 1:
            raise ClassificationNotConstant(f"labels ({b1}, {b2}) gave classes {sorted(classes)}")
        ref = reports[0]
        rows.append(
            PairClass(d, b1, b2, ref.classification, ref.entropy_nats, ref.schmidt_coefficients)
        )
    return rows


@dataclass(frozen=True)
class BellState:
    vector: np.ndarray
    xx_sign: int
    zz_sign: int


def bell_states() -> list[BellState]:
    """Common eigenvectors of ``sx (x) sx`` and ``sz (x) sz``.

    Each is extracted as the range of the product of the two sign projectors;
    the phase is fixed so the first non-negligible amplitude is real positive.
    """
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sz = np.diag([1.0, -1.0]).astype(complex)
    xx, zz = np.kron(sx, sx), np.kron(sz, sz)
    eye = np.eye(4)
    out = []
    for sz_sign, sx_sign in itertools.product((1, -1), repeat=2):
        proj = (eye + sx_sign * xx) @ (eye + sz_sign * zz) / 4
        col = proj[:, np.argmax(np.linalg.norm(proj, axis=0))]
        v = col / np.linalg.norm(col)
        lead = v[np.argmax(np.abs(v) > 1e-12)]
        v = v * (abs(lead) / lead)
        out.append(BellState(v, sx_sign, sz_sign))
    return out
