"""Clifford-operators-based equivalence classes of standard GPM sets.

Two standard sets are equivalent when one is obtained from the other by a
left multiplication (re-standardizing on a member) followed by conjugation
with a Clifford operator. On exponent pairs this is the affine action
``x -> W (x - p)`` with ``W`` in SL(2, Z_d) and ``p`` a member of the set.

Internally a set is a sorted tuple of integer codes ``m*d + n``; integer
order on the tuples is the lexicographic order on the sets.
"""

from __future__ import annotations

import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .sets import GbsSet, power_vector
from .symplectic import MAX_ENUM_D, action_table

log = logging.getLogger(__name__)

Key = tuple[int, ...]

METHOD_FULL = "I"
METHOD_EXTENSION = "II"
RETAIN_MEMBERS_MAX_L = 3


@dataclass(frozen=True)
class EquivClass:
    """One class: its lex-smallest standard member and how many sets it holds.

    ``family_members`` is only set by the extension method and lists the
    class members that belong to the extension family being classified.
    """

    representative: GbsSet
    size: int
    members: tuple[GbsSet, ...] | None = None
    family_members: tuple[GbsSet, ...] | None = None

    @property
    def family_size(self) -> int | None:
        return None if self.family_members is None else len(self.family_members)


@dataclass(frozen=True)
class Classification:
    d: int
    l: int
    method: str
    classes: tuple[EquivClass, ...]
    universe_size: int
    family_size: int | None = None

    @property
    def representatives(self) -> list[GbsSet]:
        return [c.representative for c in self.classes]

    def __len__(self) -> int:
        return len(self.classes)


# ---------------------------------------------------------------- tables


@dataclass
class _Tables:
    d: int
    action: np.ndarray  # (K, d*d) image codes
    sub: np.ndarray  # sub[a, b] = code(a - b)
    gens: np.ndarray  # (2, d*d) action of two SL(2, Z_d) generators
    pv_cache: dict = field(default_factory=dict)


_TABLES: dict[int, _Tables] = {}


def _tables(d: int) -> _Tables:
    t = _TABLES.get(d)
    if t is None:
        action = action_table(d)
        codes = np.arange(d * d)
        m, n = codes // d, codes % d
        sub = ((m[:, None] - m[None, :]) % d) * d + (n[:, None] - n[None, :]) % d
        # T = [[1,1],[0,1]] and S = [[0,-1],[1,0]] generate SL(2, Z_d)
        t_img = ((m + n) % d) * d + n
        s_img = ((-n) % d) * d + m
        t = _Tables(d, action, sub, np.stack([t_img, s_img]))
        _TABLES[d] = t
    return t


def _unique_rows(rows: np.ndarray) -> list[Key]:
    rows = np.sort(rows, axis=1)
    rows = np.unique(rows, axis=0)
    return [tuple(int(x) for x in r) for r in rows]


def _images(tables: _Tables, keys: Sequence[Key], maps: np.ndarray) -> np.ndarray:
    """All images ``maps[k](x - p)`` for every set, pivot ``p`` and map ``k``."""
    arr = np.asarray(keys, dtype=np.int64)  # (B, l)
    # diffs[b, i, j] = code(member_j - member_i)
    diffs = tables.sub[arr[:, None, :], arr[:, :, None]]
    l = arr.shape[1]
    imgs = maps[:, diffs]  # (K, B, l, l)
    return imgs.reshape(-1, l)


def _orbit_keys(d: int, key: Key, verify: bool = True) -> list[Key]:
    tables = _tables(d)
    if len(key) == 1:
        return [key]
    found = _unique_rows(_images(tables, [key], tables.action))
    if verify:
        seen = set(found)
        frontier = found
        while frontier:
            nxt = _unique_rows(_images(tables, frontier, tables.gens))
            fresh = [k for k in nxt if k not in seen]
            if fresh:
                log.warning("orbit of %s not closed after one round; extending", key)
                seen.update(fresh)
            frontier = fresh
        found = sorted(seen)
    return found


# ---------------------------------------------------------------- orbit


def _check_d(d: int) -> None:
    if not (2 <= d <= MAX_ENUM_D):
        raise ValueError(f"d must satisfy 2 <= d <= {MAX_ENUM_D}, got {d}")


def orbit_members(m: GbsSet) -> list[GbsSet]:
    """All standard sets equivalent to ``m``, sorted lexicographically."""
    if not m.is_standard():
        raise ValueError(f"{m} is not standard (missing (0,0))")
    if len(m) > m.d:
        raise ValueError(f"set size {len(m)} exceeds d={m.d}")
    _check_d(m.d)
    return [GbsSet.from_codes(k, m.d) for k in _orbit_keys(m.d, m.codes)]


def orbit(m: GbsSet) -> EquivClass:
    members = orbit_members(m)
    return EquivClass(representative=members[0], size=len(members), members=tuple(members))


# ---------------------------------------------------------------- classification


def _orbit_job(args: tuple[int, Key]) -> list[Key]:
    d, key = args
    return _orbit_keys(d, key)


class _OrbitRunner:
    """Computes orbits for a lex-ordered stream of seeds, optionally speculatively in parallel.

    Results depend only on the seed order, never on worker scheduling.
    """

    def __init__(self, d: int, workers: int):
        self.d = d
        self.workers = max(1, int(workers))
        self.pool = ProcessPoolExecutor(self.workers) if self.workers > 1 else None

    def close(self) -> None:
        if self.pool is not None:
            self.pool.shutdown()

    def run(self, candidates: Iterator[Key], claimed: set[Key]) -> Iterator[tuple[Key, list[Key]]]:
        if self.pool is None:
            for key in candidates:
                if key in claimed:
                    continue
                orb = _orbit_keys(self.d, key)
                claimed.update(orb)
                yield key, orb
            return
        batch_size = self.workers * 4
        pending = (k for k in candidates if k not in claimed)
        while True:
            batch = list(itertools.islice(pending, batch_size))
            if not batch:
                return
            results = self.pool.map(_orbit_job, [(self.d, k) for k in batch])
            for key, orb in zip(batch, results):
                if key in claimed:
                    continue
                claimed.update(orb)
                yield key, orb


def _universe(d: int, l: int) -> Iterator[Key]:
    for rest in itertools.combinations(range(1, d * d), l - 1):
        yield (0,) + rest


def universe_size(d: int, l: int) -> int:
    return math.comb(d * d - 1, l - 1)


def _retain(l: int, emit_members: bool | None) -> bool:
    return l <= RETAIN_MEMBERS_MAX_L if emit_members is None else emit_members


def classify_all(d: int, l: int, workers: int = 1, emit_members: bool | None = None) -> Classification:
    """Classify every standard l-set over Z_d, smallest unclassified set first."""
    _check_d(d)
    if not (2 <= l <= d):
        raise ValueError(f"l must satisfy 2 <= l <= d={d}, got {l}")
    retain = _retain(l, emit_members)
    claimed: set[Key] = set()
    classes = []
    runner = _OrbitRunner(d, workers)
    try:
        for key, orb in runner.run(_universe(d, l), claimed):
            classes.append(
                EquivClass(
                    representative=GbsSet.from_codes(key, d),
                    size=len(orb),
                    members=tuple(GbsSet.from_codes(k, d) for k in orb) if retain else None,
                )
            )
    finally:
        runner.close()
    total = universe_size(d, l)
    if len(claimed) != total:
        raise AssertionError(f"classes cover {len(claimed)} sets, expected {total}")
    return Classification(d, l, METHOD_FULL, tuple(classes), total)


def extension_family(base: Classification) -> list[GbsSet]:
    """Every set obtained by adding one new GPM to a base representative, deduplicated."""
    d = base.d
    family: set[Key] = set()
    for rep in base.representatives:
        present = set(rep.codes)
        for c in range(d * d):
            if c not in present:
                family.add(tuple(sorted(present | {c})))
    return [GbsSet.from_codes(k, d) for k in sorted(family)]


def classify_extension(base: Classification, workers: int = 1, emit_members: bool | None = None) -> Classification:
    """Classify the extension family of ``base`` one size up.

    Each class is the full orbit of its seed intersected with the family;
    ``size`` still counts the whole orbit so sizes sum to the full universe.
    """
    d, l = base.d, base.l + 1
    _check_d(d)
    if l > d:
        raise ValueError(f"cannot extend {base.l}-sets beyond l=d={d}")
    retain = _retain(l, emit_members)
    family_keys = [g.codes for g in extension_family(base)]
    family = set(family_keys)
    claimed: set[Key] = set()
    classes = []
    runner = _OrbitRunner(d, workers)
    try:
        for key, orb in runner.run(iter(family_keys), claimed):
            inside = [k for k in orb if k in family]
            classes.append(
                EquivClass(
                    representative=GbsSet.from_codes(key, d),
                    size=len(orb),
                    members=tuple(GbsSet.from_codes(k, d) for k in orb) if retain else None,
                    family_members=tuple(GbsSet.from_codes(k, d) for k in inside),
                )
            )
    finally:
        runner.close()
    return Classification(
        d, l, METHOD_EXTENSION, tuple(classes), universe_size(d, l), family_size=len(family_keys)
    )


def trivial_base(d: int) -> Classification:
    """The one-class classification of 1-sets, whose extension family is all standard 2-sets."""
    rep = GbsSet.from_codes([0], d)
    return Classification(d, 1, METHOD_FULL, (EquivClass(rep, 1, (rep,)),), 1)


def classify_incremental(d: int, l: int, workers: int = 1, emit_members: bool | None = None) -> Classification:
    """Chain the extension method from 1-sets up to l-sets."""
    if not (2 <= l <= d):
        raise ValueError(f"l must satisfy 2 <= l <= d={d}, got {l}")
    c = trivial_base(d)
    for size in range(2, l + 1):
        c = classify_extension(c, workers=workers, emit_members=emit_members if size == l else False)
    return c


# ---------------------------------------------------------------- lookup


def pivot_profile(s: GbsSet) -> tuple[tuple[int, ...], ...]:
    """Sorted power vectors of every re-standardization of ``s``; constant on a class."""
    d = s.d
    codes = np.asarray(s.codes)
    sub = _tables(d).sub
    vectors = []
    for p in codes:
        diffs = sub[codes, p]
        vectors.append(power_vector(GbsSet.from_codes(diffs.tolist(), d)))
    return tuple(sorted(vectors))


class ClassIndex:
    """Membership lookup over a finished classification.

    Candidates are narrowed by :func:`pivot_profile`; a class is only
    returned when its representative actually lies in the orbit of the query.
    """

    def __init__(self, c: Classification):
        self.c = c
        self._by_profile: dict[tuple, list[EquivClass]] = {}
        for cls in c.classes:
            self._by_profile.setdefault(pivot_profile(cls.representative), []).append(cls)

    def lookup(self, s: GbsSet) -> EquivClass:
        c = self.c
        if s.d != c.d or len(s) != c.l:
            raise ValueError(f"{s} is not an {c.l}-set over Z_{c.d}")
        if not s.is_standard():
            raise ValueError(f"{s} is not standard")
        candidates = self._by_profile.get(pivot_profile(s), [])
        if candidates:
            orb = set(_orbit_keys(s.d, s.codes))
            for cls in candidates:
                if cls.representative.codes in orb:
                    return cls
        raise LookupError(f"{s} does not belong to any class of this classification")


def class_of(s: GbsSet, c: Classification) -> EquivClass:
    return ClassIndex(c).lookup(s)
