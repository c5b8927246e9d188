"""Canonical GBS / GPM sets.

Sets are kept as strictly increasing tuples of GPMs in lexicographic (m, n)
order. The tuple doubles as a dictionary key and as the value compared when
picking the lexicographically smallest member of a class.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .pauli import Gpm, compose, dagger, essential_power, parse_gpm
from .residue import ModulusMismatch
from .symplectic import CliffordMap, apply


@functools.total_ordering
@dataclass(frozen=True)
class GbsSet:
    d: int
    members: tuple[Gpm, ...]

    def __post_init__(self):
        members = self.members
        for g in members:
            if g.d != self.d:
                raise ModulusMismatch(f"member {g} is over Z_{g.d}, set is over Z_{self.d}")
        if any(members[i] >= members[i + 1] for i in range(len(members) - 1)):
            raise ValueError("members must be strictly increasing; use canonicalize()")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], d: int) -> GbsSet:
        return canonicalize([Gpm(m, n, d) for m, n in pairs])

    @classmethod
    def from_codes(cls, codes: Iterable[int], d: int) -> GbsSet:
        return cls(d, tuple(Gpm.from_code(c, d) for c in sorted(set(codes))))

    @property
    def codes(self) -> tuple[int, ...]:
        return tuple(g.code for g in self.members)

    @property
    def pairs(self) -> list[list[int]]:
        return [[g.m, g.n] for g in self.members]

    def is_standard(self) -> bool:
        return bool(self.members) and self.members[0].is_identity()

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, g: object) -> bool:
        return g in self.members

    def __lt__(self, other: GbsSet) -> bool:
        return lex_compare(self, other) < 0

    def __str__(self) -> str:
        return format_set(self)


def canonicalize(raw: Sequence[Gpm]) -> GbsSet:
    if not raw:
        raise ValueError("cannot build an empty GBS set")
    d = raw[0].d
    if any(g.d != d for g in raw):
        raise ModulusMismatch("mixed moduli in GBS set")
    return GbsSet(d, tuple(sorted(set(raw))))


def standardize_by(s: GbsSet, pivot: Gpm) -> GbsSet:
    """Left-multiply every member by ``pivot^dagger``; the result contains (0,0)."""
    if pivot not in s.members:
        raise ValueError(f"pivot {pivot} is not a member of {s}")
    inv = dagger(pivot)
    return canonicalize([compose(inv, g) for g in s.members])


def apply_map(s: GbsSet, w: CliffordMap) -> GbsSet:
    if w.d != s.d:
        raise ModulusMismatch(f"map over Z_{w.d} applied to set over Z_{s.d}")
    return canonicalize([apply(w, g) for g in s.members])


def power_vector(s: GbsSet | Iterable[Gpm]) -> tuple[int, ...]:
    return tuple(sorted(essential_power(g) for g in s))


def lex_compare(a: GbsSet, b: GbsSet) -> int:
    """-1, 0 or 1 comparing the sorted member sequences elementwise."""
    if a.d != b.d:
        raise ModulusMismatch(f"moduli differ: {a.d} vs {b.d}")
    if len(a) != len(b):
        raise ValueError(f"cannot compare sets of sizes {len(a)} and {len(b)}")
    ka, kb = a.codes, b.codes
    return (ka > kb) - (ka < kb)


def format_set(s: GbsSet) -> str:
    return ";".join(str(g) for g in s.members)


def parse_set(text: str, d: int, implicit_identity: bool = False) -> GbsSet:
    """Parse ``"(0,0);(0,2);(2,0)"``.

    ``(0,0)`` is only inserted when ``implicit_identity`` is set, matching the
    shorthand of tables that omit the common identity element.
    """
    parts = [p for p in text.replace("\n", ";").split(";") if p.strip()]
    if not parts:
        raise ValueError("empty set string")
    members = [parse_gpm(p, d) for p in parts]
    if len(set(members)) != len(members):
        raise ValueError(f"duplicate members in {text!r}")
    if implicit_identity:
        members.append(Gpm(0, 0, d))
    return canonicalize(members)
