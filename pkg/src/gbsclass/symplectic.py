"""Classical (symplectic) representation of single-qudit Clifford operators.

A Clifford operator acts on GPM exponent pairs through a 2x2 matrix over
Z_d with determinant 1: ``(m, n) -> (a1*m + b1*n, a2*m + b2*n)``.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass

import numpy as np

from .pauli import Gpm
from .residue import ModulusMismatch, ext_gcd

MAX_ENUM_D = 50


@dataclass(frozen=True)
class CliffordMap:
    a1: int
    b1: int
    a2: int
    b2: int
    d: int

    def __post_init__(self):
        d = self.d
        for name in ("a1", "b1", "a2", "b2"):
            object.__setattr__(self, name, getattr(self, name) % d)
        if self.det() != 1 % d:
            raise ValueError(f"determinant of {self.rows()} is {self.det()} mod {d}, not 1")

    def det(self) -> int:
        return (self.a1 * self.b2 - self.b1 * self.a2) % self.d

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a1, self.b1), (self.a2, self.b2))

    def __call__(self, g: Gpm) -> Gpm:
        return apply(self, g)

    def __str__(self) -> str:
        return f"[[{self.a1},{self.b1}],[{self.a2},{self.b2}]] mod {self.d}"


def identity(d: int) -> CliffordMap:
    return CliffordMap(1, 0, 0, 1, d)


def apply(w: CliffordMap, g: Gpm) -> Gpm:
    if w.d != g.d:
        raise ModulusMismatch(f"map over Z_{w.d} applied to GPM over Z_{g.d}")
    return Gpm(w.a1 * g.m + w.b1 * g.n, w.a2 * g.m + w.b2 * g.n, g.d)


def compose(u: CliffordMap, v: CliffordMap) -> CliffordMap:
    """The map ``g -> u(v(g))``, i.e. the matrix product ``u @ v``."""
    if u.d != v.d:
        raise ModulusMismatch(f"moduli differ: {u.d} vs {v.d}")
    return CliffordMap(
        u.a1 * v.a1 + u.b1 * v.a2,
        u.a1 * v.b1 + u.b1 * v.b2,
        u.a2 * v.a1 + u.b2 * v.a2,
        u.a2 * v.b1 + u.b2 * v.b2,
        u.d,
    )


def inverse(w: CliffordMap) -> CliffordMap:
    # det == 1, so the adjugate is the inverse
    return CliffordMap(w.b2, -w.b1, -w.a2, w.a1, w.d)


_ENUM_LOCK = threading.Lock()
_ENUM_CACHE: dict[int, tuple[CliffordMap, ...]] = {}
_TABLE_CACHE: dict[int, np.ndarray] = {}


def _check_enum_range(d: int) -> None:
    if not (2 <= d <= MAX_ENUM_D):
        raise ValueError(f"enumeration supports 2 <= d <= {MAX_ENUM_D}, got {d}")


def enumerate_maps(d: int) -> tuple[CliffordMap, ...]:
    """Every determinant-1 matrix over Z_d, row-major order over (a1, b1, a2, b2)."""
    _check_enum_range(d)
    cached = _ENUM_CACHE.get(d)
    if cached is not None:
        return cached
    with _ENUM_LOCK:
        if d not in _ENUM_CACHE:
            maps = tuple(
                CliffordMap(a1, b1, a2, b2, d)
                for a1, b1, a2, b2 in itertools.product(range(d), repeat=4)
                if (a1 * b2 - b1 * a2) % d == 1
            )
            _ENUM_CACHE[d] = maps
    return _ENUM_CACHE[d]


def action_table(d: int) -> np.ndarray:
    """Read-only ``(len(maps), d*d)`` array: ``table[k, code(g)] = code(maps[k](g))``."""
    cached = _TABLE_CACHE.get(d)
    if cached is not None:
        return cached
    maps = enumerate_maps(d)
    w = np.array([[x.a1, x.b1, x.a2, x.b2] for x in maps], dtype=np.int64)
    codes = np.arange(d * d)
    m, n = codes // d, codes % d
    img_m = (w[:, 0:1] * m + w[:, 1:2] * n) % d
    img_n = (w[:, 2:3] * m + w[:, 3:4] * n) % d
    table = img_m * d + img_n
    table.setflags(write=False)
    with _ENUM_LOCK:
        _TABLE_CACHE.setdefault(d, table)
    return _TABLE_CACHE[d]


def lemma_constructors(g: Gpm) -> tuple[CliffordMap, CliffordMap]:
    """The two maps taking ``X^s Z^t`` to ``Z^b`` and then ``Z^b`` to ``Z^a``.

    Here ``b = gcd(s, t)`` and ``a = gcd(b, d)``; quotients such as ``t/b``
    are exact integer divisions taken before reduction mod d.
    """
    if g.is_identity():
        raise ValueError("the identity GPM has no canonicalizing map")
    s, t, d = g.m, g.n, g.d
    first = ext_gcd(s, t)
    b = first.g
    second = ext_gcd(d, b)
    a = second.g
    c_st = CliffordMap(t // b, -(s // b), first.x, first.y, d)
    c_db = CliffordMap(b // a, -(d // a), second.x, second.y, d)
    return c_st, c_db


def canonicalizer_for(g: Gpm) -> CliffordMap:
    """A map sending ``g`` to ``(0, gcd(m, n, d))``."""
    c_st, c_db = lemma_constructors(g)
    return compose(c_db, c_st)
