"""Generalized Pauli matrices X^m Z^n on C^d, modulo global phase.

A GPM is stored as its exponent pair ``(m, n)`` reduced mod ``d``. Every
operation here discards the phase picked up when reordering X and Z, so
``compose`` is plain componentwise addition of exponents.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable

from .residue import ModulusMismatch, Residue, gcd3


@dataclass(frozen=True, order=True)
class Gpm:
    m: int
    n: int
    d: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"d must be >= 2, got {self.d}")
        object.__setattr__(self, "m", self.m % self.d)
        object.__setattr__(self, "n", self.n % self.d)

    @classmethod
    def from_code(cls, code: int, d: int) -> Gpm:
        return cls(code // d, code % d, d)

    @property
    def code(self) -> int:
        """Row-major index ``m*d + n``; integer order matches lex order on (m, n)."""
        return self.m * self.d + self.n

    @property
    def pair(self) -> tuple[int, int]:
        return (self.m, self.n)

    def is_identity(self) -> bool:
        return self.m == 0 and self.n == 0

    def __str__(self) -> str:
        return f"({self.m},{self.n})"


@dataclass(frozen=True)
class PowerProfile:
    essential_order: int
    essential_power: int


def _check(a: Gpm, b: Gpm) -> None:
    if a.d != b.d:
        raise ModulusMismatch(f"moduli differ: {a.d} vs {b.d}")


def compose(a: Gpm, b: Gpm) -> Gpm:
    _check(a, b)
    return Gpm(a.m + b.m, a.n + b.n, a.d)


def dagger(a: Gpm) -> Gpm:
    return Gpm(-a.m, -a.n, a.d)


def power_profile(a: Gpm) -> PowerProfile:
    if a.is_identity():
        return PowerProfile(essential_order=1, essential_power=0)
    p = gcd3(a.m, a.n, a.d)
    return PowerProfile(essential_order=a.d // p, essential_power=p)


def essential_power(a: Gpm) -> int:
    return 0 if a.is_identity() else math.gcd(a.m, a.n, a.d)


def symplectic_form(a: Gpm, b: Gpm) -> Residue:
    # sign convention: a.n*b.m - a.m*b.n, so form((0,1),(1,0)) == 1
    _check(a, b)
    return Residue(a.n * b.m - a.m * b.n, a.d)


def difference_set(members: Iterable[Gpm]) -> frozenset[Gpm]:
    """All ``U_j U_k^dagger`` for j != k, identified by exponent differences."""
    members = list(dict.fromkeys(members))
    if len(members) < 2:
        raise ValueError("difference set needs at least two distinct members")
    d = members[0].d
    for g in members:
        if g.d != d:
            raise ModulusMismatch("mixed moduli in difference set")
    return frozenset(
        Gpm(a.m - b.m, a.n - b.n, d)
        for a in members
        for b in members
        if a != b
    )


_PAIR_RE = re.compile(r"^\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$")


def parse_gpm(text: str, d: int) -> Gpm:
    match = _PAIR_RE.match(text.strip())
    if match is None:
        raise ValueError(f"cannot parse GPM from {text!r}; expected '(m,n)'")
    m, n = int(match.group(1)), int(match.group(2))
    if not (0 <= m < d and 0 <= n < d):
        raise ValueError(f"exponents of {text!r} must lie in [0, {d})")
    return Gpm(m, n, d)
