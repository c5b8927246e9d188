"""Arithmetic in Z_d and the extended-gcd helpers behind the Clifford constructors."""

from __future__ import annotations

import math
from dataclasses import dataclass


class ModulusMismatch(ValueError):
    """Raised when two values over different moduli are combined."""


@dataclass(frozen=True, order=True)
class Residue:
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        # Euclidean remainder, so -1 mod 6 is 5
        object.__setattr__(self, "value", self.value % self.modulus)

    def _check(self, other: Residue) -> None:
        if not isinstance(other, Residue):
            raise TypeError(f"expected Residue, got {type(other).__name__}")
        if other.modulus != self.modulus:
            raise ModulusMismatch(f"moduli differ: {self.modulus} vs {other.modulus}")

    def __add__(self, other: Residue) -> Residue:
        self._check(other)
        return Residue(self.value + other.value, self.modulus)

    def __sub__(self, other: Residue) -> Residue:
        self._check(other)
        return Residue(self.value - other.value, self.modulus)

    def __mul__(self, other: Residue) -> Residue:
        self._check(other)
        return Residue(self.value * other.value, self.modulus)

    def __neg__(self) -> Residue:
        return Residue(-self.value, self.modulus)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"{self.value} mod {self.modulus}"


def add(a: Residue, b: Residue) -> Residue:
    return a + b


def sub(a: Residue, b: Residue) -> Residue:
    return a - b


def mul(a: Residue, b: Residue) -> Residue:
    return a * b


@dataclass(frozen=True)
class BezoutTriple:
    """``x*a + y*b == g`` with ``g = gcd(a, b) > 0``."""

    g: int
    x: int
    y: int


def ext_gcd(a: int, b: int) -> BezoutTriple:
    """Extended Euclid on arbitrary (possibly negative) integers."""
    if a == 0 and b == 0:
        raise ValueError("ext_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return BezoutTriple(old_r, old_x, old_y)


def gcd3(a: int, b: int, d: int) -> int:
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    return math.gcd(a, b, d)
