"""Chords between ``n + 1`` labelled points on a circle and non-crossing spanning trees.

Points are labelled ``0..n`` counterclockwise. All geometry is combinatorial on
the cyclic order; no coordinates are involved.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from . import kernels


@dataclass(frozen=True, order=True)
class Chord:
    """Chord c(p, q); stored with ``p < q``."""

    n: int
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"invalid rank n={self.n}; need n >= 1")
        p, q = self.p, self.q
        if not (0 <= p <= self.n and 0 <= q <= self.n) or p == q:
            raise ValueError(f"invalid chord ({p}, {q}) for n={self.n}")
        if p > q:
            object.__setattr__(self, "p", q)
            object.__setattr__(self, "q", p)

    def __repr__(self) -> str:
        return f"c({self.p},{self.q})"

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.p, self.q

    def other(self, point: int) -> int:
        if point == self.p:
            return self.q
        if point == self.q:
            return self.p
        raise ValueError(f"{point} is not an endpoint of {self!r}")

    def to_json(self) -> list[int]:
        return [self.p, self.q]


def all_chords(n: int) -> list[Chord]:
    return [Chord(n, p, q) for p in range(n) for q in range(p + 1, n + 1)]


def distance(i: int, j: int, n: int) -> int:
    """Counterclockwise number of steps from point ``i`` to point ``j``."""
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError(f"points ({i}, {j}) out of range for n={n}")
    return j - i if j >= i else j + n + 1 - i


def rotate_chord(c: Chord, steps: int = 1) -> Chord:
    """Rotate clockwise by ``steps`` positions: point ``p`` goes to ``p - steps``."""
    m = c.n + 1
    return Chord(c.n, (c.p - steps) % m, (c.q - steps) % m)


class MeetKind(enum.Enum):
    DISJOINT = "Disjoint"
    INTERIOR_CROSS = "InteriorCross"
    SHARED_ENDPOINT = "SharedEndpoint"


class MeetType(NamedTuple):
    kind: MeetKind
    point: Optional[int] = None


def _crosses(a: Chord, b: Chord) -> bool:
    # exactly one endpoint of b strictly inside the arc (a.p, a.q)
    inside = (a.p < b.p < a.q) + (a.p < b.q < a.q)
    return inside == 1 and not set(a.endpoints) & set(b.endpoints)


def meet_type(c: Chord, d: Chord) -> MeetType:
    if c.n != d.n:
        raise ValueError(f"rank mismatch: {c!r} (n={c.n}) vs {d!r} (n={d.n})")
    if c == d:
        raise ValueError(f"meet_type needs distinct chords, got {c!r} twice")
    shared = set(c.endpoints) & set(d.endpoints)
    if shared:
        return MeetType(MeetKind.SHARED_ENDPOINT, shared.pop())
    if _crosses(c, d):
        return MeetType(MeetKind.INTERIOR_CROSS)
    return MeetType(MeetKind.DISJOINT)


@dataclass(frozen=True)
class NCTree:
    n: int
    chords: tuple[Chord, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "chords", tuple(sorted(set(self.chords))))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "NCTree":
        return cls(n, tuple(Chord(n, p, q) for p, q in pairs))

    def to_json(self) -> dict:
        return {"n": self.n, "chords": [c.to_json() for c in self.chords]}

    @classmethod
    def from_json(cls, data: dict) -> "NCTree":
        return cls.from_pairs(int(data["n"]), [tuple(c) for c in data["chords"]])

    def rotated(self, steps: int = 1) -> "NCTree":
        return NCTree(self.n, tuple(rotate_chord(c, steps) for c in self.chords))


@dataclass(frozen=True)
class TreeCheck:
    ok: bool
    reason: Optional[str] = None
    detail: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def is_nc_spanning_tree(chords: Iterable[Chord], n: int) -> TreeCheck:
    """Check the non-crossing spanning tree conditions.

    Failure reasons are ``"size"``, ``"crossing"``, ``"cycle"`` and
    ``"disconnected"``; ``detail`` names the offending chords.
    """
    chords = sorted(set(chords))
    for c in chords:
        if c.n != n:
            raise ValueError(f"{c!r} belongs to n={c.n}, expected n={n}")
    if len(chords) != n:
        return TreeCheck(False, "size", f"{len(chords)} distinct chords, need {n}")
    for a_idx, a in enumerate(chords):
        for b in chords[a_idx + 1:]:
            if meet_type(a, b).kind is MeetKind.INTERIOR_CROSS:
                return TreeCheck(False, "crossing", f"{a!r} crosses {b!r}")
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in chords:
        rp, rq = find(c.p), find(c.q)
        if rp == rq:
            return TreeCheck(False, "cycle", f"{c!r} closes a cycle")
        parent[rp] = rq
    if len({find(v) for v in range(n + 1)}) != 1:
        return TreeCheck(False, "disconnected")
    return TreeCheck(True)


def nc_tree_count(n: int) -> int:
    """Closed-form count ``C(3n, n) / (2n + 1)``."""
    if n < 1:
        raise ValueError(f"invalid rank n={n}; need n >= 1")
    q, r = divmod(math.comb(3 * n, n), 2 * n + 1)
    assert r == 0
    return q


def _kernel_tables(n: int) -> tuple[list[Chord], list[tuple[int, int]], list[int]]:
    chords = all_chords(n)
    cross = [0] * len(chords)
    for a, ca in enumerate(chords):
        for b, cb in enumerate(chords):
            if a != b and meet_type(ca, cb).kind is MeetKind.INTERIOR_CROSS:
                cross[a] |= 1 << b
    return chords, [c.endpoints for c in chords], cross


def _trees_with_first(args: tuple[int, int]) -> list[tuple[int, ...]]:
    n, first = args
    _, ends, cross = _kernel_tables(n)
    return kernels.extend_trees(n + 1, ends, cross, n, (first,))


def enumerate_nc_trees(n: int, jobs: int = 1) -> list[NCTree]:
    """Every non-crossing spanning tree, ordered by sorted chord tuple.

    Exhaustive backtracking over chords in lexicographic order. With
    ``jobs > 1`` the search is split by first chord over a process pool and
    merged back in order.
    """
    if n < 1:
        raise ValueError(f"invalid rank n={n}; need n >= 1")
    chords, ends, cross = _kernel_tables(n)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_trees_with_first, [(n, k) for k in range(len(chords))])
            raw = [t for part in parts for t in part]
    else:
        raw = kernels.extend_trees(n + 1, ends, cross, n, ())
    return [NCTree(n, tuple(chords[k] for k in idx)) for idx in raw]


def count_nc_trees(n: int) -> int:
    """Brute-force count through the enumeration kernel (no materialisation)."""
    _, ends, cross = _kernel_tables(n)
    return kernels.count_trees(n + 1, ends, cross, n)
