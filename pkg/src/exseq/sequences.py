"""Exceptional pairs and sequences, the pair trichotomy and exhaustive enumeration."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import NotExceptionalError
from .chords import Chord, MeetKind, distance, meet_type
from .quiver import Interval, ObjectLike, ShiftedObject, as_shifted, ext_dim, hom_dim, indecomposables, module_of


class PairRelation(enum.Enum):
    BOTH_ORDERS = "BothOrders"
    NEITHER_ORDER = "NeitherOrder"
    ONLY_FIRST_SECOND = "OnlyFirstSecond"
    ONLY_SECOND_FIRST = "OnlySecondFirst"


@dataclass(frozen=True)
class ExceptionalSequence:
    n: int
    objects: tuple[ShiftedObject, ...]

    def __post_init__(self) -> None:
        objs = tuple(as_shifted(x) for x in self.objects)
        for x in objs:
            if x.n != self.n:
                raise ValueError(f"{x!r} has rank {x.n}, sequence has n={self.n}")
        if len(objs) > self.n:
            raise ValueError(f"sequence of length {len(objs)} exceeds n={self.n}")
        object.__setattr__(self, "objects", objs)

    @classmethod
    def of(cls, n: int, *pairs: tuple[int, int]) -> "ExceptionalSequence":
        """Shift-zero sequence from ``(i, j)`` pairs."""
        return cls(n, tuple(ShiftedObject(Interval(n, i, j)) for i, j in pairs))

    @property
    def modules(self) -> tuple[Interval, ...]:
        return tuple(x.module for x in self.objects)

    @property
    def shifts(self) -> tuple[int, ...]:
        return tuple(x.shift for x in self.objects)

    @property
    def is_complete(self) -> bool:
        return len(self.objects) == self.n

    def __len__(self) -> int:
        return len(self.objects)

    def __repr__(self) -> str:
        return "(" + ", ".join(map(repr, self.objects)) + ")"

    def to_json(self) -> dict:
        return {"n": self.n, "objects": [x.to_json() for x in self.objects]}

    @classmethod
    def from_json(cls, data: dict) -> "ExceptionalSequence":
        n = int(data["n"])
        return cls(n, tuple(ShiftedObject.from_json(n, o) for o in data["objects"]))


def is_exceptional_pair(e: ObjectLike, f: ObjectLike) -> bool:
    """(E, F) is exceptional iff Hom(F, E) = Ext^1(F, E) = 0 on the underlying modules."""
    e, f = module_of(e), module_of(f)
    if e == f:
        raise ValueError(f"exceptional pair needs distinct objects, got {e!r} twice")
    return hom_dim(f, e) == 0 and ext_dim(f, e) == 0


def pair_relation(x: ObjectLike, y: ObjectLike) -> PairRelation:
    """Which orders of ``x, y`` form exceptional pairs, from Hom/Ext data."""
    x, y = module_of(x), module_of(y)
    forward = is_exceptional_pair(x, y)
    backward = is_exceptional_pair(y, x)
    if forward and backward:
        return PairRelation.BOTH_ORDERS
    if forward:
        return PairRelation.ONLY_FIRST_SECOND
    if backward:
        return PairRelation.ONLY_SECOND_FIRST
    return PairRelation.NEITHER_ORDER


def geometric_pair_relation(x: Interval, y: Interval) -> PairRelation:
    """The same trichotomy read off the chords ``c(i, j)`` and ``c(i', j')``.

    Disjoint chords give both orders and crossing chords neither. For a
    shared endpoint, ``(x, y)`` is the admissible order iff one of the four
    distance conditions holds.
    """
    if x == y:
        raise ValueError(f"pair relation needs distinct intervals, got {x!r} twice")
    n = x.n
    meet = meet_type(Chord(n, x.i, x.j), Chord(n, y.i, y.j))
    if meet.kind is MeetKind.DISJOINT:
        return PairRelation.BOTH_ORDERS
    if meet.kind is MeetKind.INTERIOR_CROSS:
        return PairRelation.NEITHER_ORDER
    i, j, i2, j2 = x.i, x.j, y.i, y.j

    def d(a: int, b: int) -> int:
        return distance(a, b, n)

    first = (
        (i == i2 and d(i, j) < d(i2, j2))
        or (i == j2 and d(i, j) < d(j2, i2))
        or (j == i2 and d(j, i) < d(i2, j2))
        or (j == j2 and d(j, i) < d(j2, i2))
    )
    return PairRelation.ONLY_FIRST_SECOND if first else PairRelation.ONLY_SECOND_FIRST


def first_failing_pair(seq: ExceptionalSequence) -> tuple[Interval, Interval] | None:
    mods = seq.modules
    for a in range(len(mods)):
        for b in range(a + 1, len(mods)):
            if mods[a] == mods[b] or not is_exceptional_pair(mods[a], mods[b]):
                return mods[a], mods[b]
    return None


def is_exceptional_sequence(seq: ExceptionalSequence) -> bool:
    return first_failing_pair(seq) is None


def require_complete_exceptional(seq: ExceptionalSequence) -> None:
    if not seq.is_complete:
        raise ValueError(f"sequence of length {len(seq)} is not complete for n={seq.n}")
    bad = first_failing_pair(seq)
    if bad is not None:
        raise NotExceptionalError(f"({bad[0]!r}, {bad[1]!r}) is not an exceptional pair", bad)


def follow_masks(n: int) -> list[int]:
    """Bit ``b`` of entry ``a`` is set iff (X_a, X_b) is an exceptional pair."""
    mods = indecomposables(n)
    masks = []
    for a in mods:
        m = 0
        for k, b in enumerate(mods):
            if a != b and is_exceptional_pair(a, b):
                m |= 1 << k
        masks.append(m)
    return masks


def _sequences_with_first(args: tuple[int, int]) -> list[tuple[int, ...]]:
    n, first = args
    return kernels.extend_sequences(follow_masks(n), n, (first,))


def enumerate_complete_sequences(n: int, jobs: int = 1) -> Iterator[ExceptionalSequence]:
    """Yield every complete exceptional module sequence (all shifts 0).

    Lexicographic order on the tuple of intervals. ``jobs > 1`` splits the
    search by first element across processes; output order is unchanged.
    """
    mods = indecomposables(n)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_sequences_with_first, [(n, k) for k in range(len(mods))]))
        raw = (t for part in parts for t in part)
    else:
        raw = iter(kernels.extend_sequences(follow_masks(n), n))
    for idx in raw:
        yield ExceptionalSequence(n, tuple(ShiftedObject(mods[k]) for k in idx))


def count_complete_sequences(n: int) -> int:
    """Brute-force count through the enumeration kernel."""
    return kernels.count_sequences(follow_masks(n), n)


def sequence_count(n: int) -> int:
    """Closed form ``(n + 1) ** (n - 1)``."""
    if n < 1:
        raise ValueError(f"invalid rank n={n}; need n >= 1")
    return (n + 1) ** (n - 1)


def class_key(seq: ExceptionalSequence) -> tuple[Interval, ...]:
    """Canonical key of the equivalence class: the sorted set of underlying modules."""
    require_complete_exceptional(seq)
    return tuple(sorted(seq.modules))


def class_key_json(key: Sequence[Interval]) -> list[list[int]]:
    return [[x.i, x.j] for x in key]


def group_by_class(seqs: Iterable[ExceptionalSequence]) -> dict[tuple[Interval, ...], list[ExceptionalSequence]]:
    groups: dict[tuple[Interval, ...], list[ExceptionalSequence]] = {}
    for s in seqs:
        groups.setdefault(tuple(sorted(s.modules)), []).append(s)
    return groups
