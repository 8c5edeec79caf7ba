"""Interval modules over the linear quiver 1 <- 2 <- ... <- n.

Every indecomposable module is an interval ``X(i, j)`` with ``0 <= i < j <= n``,
supported on the vertices ``i+1 .. j`` with identity structure maps inside the
support. Hom and Ext^1 between intervals are at most one dimensional and are
read off from four rectangular regions of the Auslander-Reiten quiver.

Two independent routes are provided: the closed-form regions (``hom_dim``,
``ext_dim``, ``hom_region``) and a linear-algebra oracle (``hom_dim_oracle``
together with ``euler_form``) that never looks at the regions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


@dataclass(frozen=True, order=True)
class Interval:
    """The indecomposable module X(i, j) over the rank-``n`` quiver."""

    n: int
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"invalid rank n={self.n}; need n >= 1")
        if not 0 <= self.i < self.j <= self.n:
            raise ValueError(f"invalid interval ({self.i}, {self.j}) for n={self.n}")

    def __repr__(self) -> str:
        return f"X({self.i},{self.j})"

    @property
    def is_projective(self) -> bool:
        return self.i == 0

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j}

    @classmethod
    def from_json(cls, n: int, data: dict) -> "Interval":
        return cls(n, int(data["i"]), int(data["j"]))


@dataclass(frozen=True, order=True)
class ShiftedObject:
    """The derived-category object Sigma^shift applied to an interval module."""

    module: Interval
    shift: int = 0

    @property
    def n(self) -> int:
        return self.module.n

    def shifted(self, by: int) -> "ShiftedObject":
        return ShiftedObject(self.module, self.shift + by)

    def __repr__(self) -> str:
        if self.shift == 0:
            return repr(self.module)
        return f"S^{self.shift}{self.module!r}"

    def to_json(self) -> dict:
        return {"i": self.module.i, "j": self.module.j, "shift": self.shift}

    @classmethod
    def from_json(cls, n: int, data: dict) -> "ShiftedObject":
        return cls(Interval(n, int(data["i"]), int(data["j"])), int(data.get("shift", 0)))


ObjectLike = Union[Interval, ShiftedObject]


def as_shifted(x: ObjectLike) -> ShiftedObject:
    return x if isinstance(x, ShiftedObject) else ShiftedObject(x, 0)


def module_of(x: ObjectLike) -> Interval:
    return x.module if isinstance(x, ShiftedObject) else x


class RegionKind(enum.Enum):
    HOM_OUT = "HomOut"  # Hom(X, Y) != 0
    HOM_IN = "HomIn"  # Hom(Y, X) != 0
    EXT_OUT = "ExtOut"  # Ext^1(X, Y) != 0
    EXT_IN = "ExtIn"  # Ext^1(Y, X) != 0


def indecomposables(n: int) -> list[Interval]:
    """All ``n(n+1)/2`` interval modules in lexicographic order."""
    if n < 1:
        raise ValueError(f"invalid rank n={n}; need n >= 1")
    return [Interval(n, i, j) for i in range(n) for j in range(i + 1, n + 1)]


def dim_vector(x: Interval) -> tuple[int, ...]:
    """Dimension vector at vertices ``1..n``."""
    return tuple(1 if x.i < v <= x.j else 0 for v in range(1, x.n + 1))


def _region_bounds(i: int, j: int, n: int, kind: RegionKind) -> tuple[int, int, int, int]:
    # (s_lo, s_hi, t_lo, t_hi), inclusive; empty ranges are allowed
    if kind is RegionKind.HOM_OUT:
        return i, j - 1, j, n
    if kind is RegionKind.HOM_IN:
        return 0, i, i + 1, j
    if kind is RegionKind.EXT_OUT:
        return 0, i - 1, i, j - 1
    return i + 1, j, j + 1, n


def _in_region(x: Interval, y: Interval, kind: RegionKind) -> bool:
    s_lo, s_hi, t_lo, t_hi = _region_bounds(x.i, x.j, x.n, kind)
    return s_lo <= y.i <= s_hi and t_lo <= y.j <= t_hi


def hom_region(x: Interval, kind: RegionKind) -> set[Interval]:
    """The rectangle of intervals ``X(s, t)`` attached to ``x`` for ``kind``."""
    s_lo, s_hi, t_lo, t_hi = _region_bounds(x.i, x.j, x.n, kind)
    return {
        Interval(x.n, s, t)
        for s in range(max(s_lo, 0), s_hi + 1)
        for t in range(max(t_lo, s + 1), min(t_hi, x.n) + 1)
    }


def _check_same_rank(x: Interval, y: Interval) -> None:
    if x.n != y.n:
        raise ValueError(f"rank mismatch: {x!r} has n={x.n}, {y!r} has n={y.n}")


def hom_dim(x: Interval, y: Interval) -> int:
    _check_same_rank(x, y)
    return int(_in_region(x, y, RegionKind.HOM_OUT))


def ext_dim(x: Interval, y: Interval) -> int:
    """dim Ext^1(x, y)."""
    _check_same_rank(x, y)
    return int(_in_region(x, y, RegionKind.EXT_OUT))


def _rank(rows: list[list[Fraction]], ncols: int) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / p
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def hom_dim_oracle(x: Interval, y: Interval) -> int:
    """dim Hom(x, y) as the nullity of the commutativity system.

    Unknowns are the scalars ``phi_v`` at vertices in both supports. Each arrow
    ``v+1 -> v`` contributes ``y_map(v) * phi_{v+1} - phi_v * x_map(v) = 0``
    where a structure map is 1 inside the support and 0 otherwise.
    """
    _check_same_rank(x, y)
    n = x.n
    dx, dy = dim_vector(x), dim_vector(y)
    unknowns = [v for v in range(1, n + 1) if dx[v - 1] and dy[v - 1]]
    col = {v: c for c, v in enumerate(unknowns)}
    rows: list[list[Fraction]] = []
    for v in range(1, n):
        x_map = 1 if dx[v - 1] and dx[v] else 0
        y_map = 1 if dy[v - 1] and dy[v] else 0
        row = [Fraction(0)] * len(unknowns)
        if v + 1 in col:
            row[col[v + 1]] += y_map
        if v in col:
            row[col[v]] -= x_map
        if any(row):
            rows.append(row)
    return len(unknowns) - _rank(rows, len(unknowns))


def euler_form(d: tuple[int, ...], e: tuple[int, ...]) -> int:
    """The Euler form: sum d_v e_v minus the sum over arrows v+1 -> v of d_{v+1} e_v."""
    if len(d) != len(e):
        raise ValueError(f"dimension vector length mismatch: {len(d)} vs {len(e)}")
    diag = sum(a * b for a, b in zip(d, e))
    arrows = sum(d[v + 1] * e[v] for v in range(len(d) - 1))
    return diag - arrows


def ext_dim_oracle(x: Interval, y: Interval) -> int:
    return hom_dim_oracle(x, y) - euler_form(dim_vector(x), dim_vector(y))


def derived_hom_degrees(a: ObjectLike, b: ObjectLike) -> dict[int, int]:
    """Degrees ``l`` with Hom(Sigma^l a, b) != 0, mapped to their dimensions.

    For ``a = Sigma^p X`` and ``b = Sigma^q Y`` only ``l = q - p`` (Hom(X, Y))
    and ``l = q - p - 1`` (Ext^1(X, Y)) can contribute, and at most one does.
    """
    a, b = as_shifted(a), as_shifted(b)
    base = b.shift - a.shift
    out: dict[int, int] = {}
    h = hom_dim(a.module, b.module)
    if h:
        out[base] = h
    e = ext_dim(a.module, b.module)
    if e:
        out[base - 1] = e
    return out
