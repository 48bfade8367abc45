"""Exact residue arithmetic in Z_d for prime d.

All index algebra of the finite-dimensional constructions (exponents of the
clock operator, collective coordinates) is done here with Python integers, so
phases are only formed at the very end as ``omega**k``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .errors import (
    DimensionTooLarge,
    ModulusMismatch,
    NonPrimeDimension,
    TwoIsZero,
    ZeroInverse,
)

DEFAULT_MAX_D = 97


def max_dimension() -> int:
    """Largest accepted modulus; ``MUCB_MAX_D`` overrides the default of 97."""
    raw = os.environ.get("MUCB_MAX_D")
    if raw is None:
        return DEFAULT_MAX_D
    try:
        value = int(raw)
    except ValueError as exc:
        raise DimensionTooLarge(f"MUCB_MAX_D must be an integer, got {raw!r}") from exc
    return value


@lru_cache(maxsize=None)
def is_prime(d: int) -> bool:
    """Deterministic trial-division primality test."""
    if d < 2:
        return False
    if d < 4:
        return True
    if d % 2 == 0:
        return False
    k = 3
    while k * k <= d:
        if d % k == 0:
            return False
        k += 2
    return True


def require_prime(d: int, *, allow_two: bool = True) -> int:
    """Validate a dimension and return it as an ``int``.

    Raises
    ------
    NonPrimeDimension
        If ``d`` is not prime.
    TwoIsZero
        If ``d == 2`` and ``allow_two`` is False.
    DimensionTooLarge
        If ``d`` exceeds :func:`max_dimension`.
    """
    d = int(d)
    if not is_prime(d):
        raise NonPrimeDimension(f"dimension {d} is not prime")
    if d > max_dimension():
        raise DimensionTooLarge(
            f"dimension {d} exceeds the cap {max_dimension()} (set MUCB_MAX_D to raise it)"
        )
    if d == 2 and not allow_two:
        raise TwoIsZero("2 has no inverse modulo 2; use the Bell construction for d=2")
    return d


Operand = Union["FieldElement", int]


@dataclass(frozen=True)
class FieldElement:
    """A residue ``value`` modulo the prime ``modulus``.

    Integers mix freely with field elements in arithmetic and are reduced
    modulo ``modulus`` first.

    >>> FieldElement(2, 7) * FieldElement(4, 7)
    FieldElement(value=1, modulus=7)
    """

    value: int
    modulus: int

    def __post_init__(self):
        if not is_prime(self.modulus):
            raise NonPrimeDimension(f"modulus {self.modulus} is not prime")
        if not 0 <= self.value < self.modulus:
            raise ValueError(
                f"value {self.value} outside [0, {self.modulus}); use FieldElement.of()"
            )

    @classmethod
    def of(cls, value: int, modulus: int) -> "FieldElement":
        return cls(int(value) % modulus, modulus)

    def _coerce(self, other: Operand) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(
                    f"cannot combine residues mod {self.modulus} and mod {other.modulus}"
                )
            return other
        if isinstance(other, int):
            return FieldElement.of(other, self.modulus)
        return NotImplemented

    def __add__(self, other: Operand) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement((self.value + other.value) % self.modulus, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: Operand) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement((self.value - other.value) % self.modulus, self.modulus)

    def __rsub__(self, other: Operand) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other: Operand) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement((self.value * other.value) % self.modulus, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "FieldElement":
        return FieldElement((-self.value) % self.modulus, self.modulus)

    def __truediv__(self, other: Operand) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * inv(other)

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return inv(self) ** (-exponent)
        return FieldElement(pow(self.value, exponent, self.modulus), self.modulus)

    def __int__(self) -> int:
        return self.value

    __index__ = __int__

    def __repr__(self) -> str:
        return f"FieldElement(value={self.value}, modulus={self.modulus})"


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    # iterative extended Euclid: returns (g, x, y) with a*x + b*y == g
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def inv(a: FieldElement) -> FieldElement:
    """Multiplicative inverse by the extended Euclidean algorithm."""
    if a.value == 0:
        raise ZeroInverse(f"0 has no inverse modulo {a.modulus}")
    g, x, _ = _egcd(a.value, a.modulus)
    assert g == 1
    return FieldElement(x % a.modulus, a.modulus)


def half(d: int) -> FieldElement:
    """The field element acting as 1/2, i.e. ``(d + 1) // 2``."""
    if d == 2:
        raise TwoIsZero("2 == 0 modulo 2, so 1/2 does not exist")
    return inv(FieldElement.of(2, d))


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + a._coerce(b)


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - a._coerce(b)


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * a._coerce(b)
