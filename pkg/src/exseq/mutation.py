"""Mutations of exceptional pairs, the braid/shift action and the cyclic action.

For an exceptional pair (E, F) = (Sigma^a X, Sigma^b Y) whose chords share the
point ``i`` (chord of E is c(i, j), chord of F is c(i, l)), exactly one of three
label orders occurs:

=======  =========  =============================  ==================  ==================
case     order      nonzero map                    L_E F               R_F E
=======  =========  =============================  ==================  ==================
Case4    i < j < l  Hom(X, Y), mono                Sigma^b X(j, l)      Sigma^(a-1) X(j, l)
Case5    j < l < i  Hom(X, Y), epi                 Sigma^(b+1) X(j, l)  Sigma^a X(j, l)
Case6    l < i < j  Ext^1(X, Y)                    Sigma^b X(l, j)      Sigma^a X(l, j)
=======  =========  =============================  ==================  ==================

Disjoint chords leave both objects unchanged.
"""

from __future__ import annotations

import enum
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .bijection import phi
from .chords import Chord, MeetKind, meet_type
from .errors import InvariantViolation, NotExceptionalError
from .quiver import Interval, ObjectLike, ShiftedObject, as_shifted, derived_hom_degrees
from .sequences import ExceptionalSequence, is_exceptional_pair, require_complete_exceptional


class Direction(enum.Enum):
    LEFT = "Left"
    RIGHT = "Right"


class MutationCase(enum.Enum):
    DISJOINT = "Disjoint"
    CASE4 = "Case4"
    CASE5 = "Case5"
    CASE6 = "Case6"


@dataclass(frozen=True)
class MutationResult:
    object: ShiftedObject
    case: MutationCase


def chord_mutate(direction: Direction, mover: Chord, target: Chord) -> Chord:
    """Chord-level mutation.

    ``Left``: L_mover(target). ``Right``: R_mover(target); note the argument
    roles, R_{c'} c is ``chord_mutate(RIGHT, c', c)``. Disjoint chords return
    the chord being mutated; chords sharing a point return the third side of
    the triangle on that point.
    """
    meet = meet_type(mover, target)
    if meet.kind is MeetKind.INTERIOR_CROSS:
        raise ValueError(f"{mover!r} and {target!r} cross; mutation undefined")
    if meet.kind is MeetKind.DISJOINT:
        return target
    return Chord(mover.n, mover.other(meet.point), target.other(meet.point))


def mutation_case(e: ObjectLike, f: ObjectLike) -> tuple[MutationCase, Optional[tuple[int, int, int]]]:
    """Classify the exceptional pair (e, f); returns the case and labels ``(i, j, l)``."""
    ce, cf = phi(e), phi(f)
    meet = meet_type(ce, cf)
    if meet.kind is MeetKind.DISJOINT:
        return MutationCase.DISJOINT, None
    if meet.kind is MeetKind.INTERIOR_CROSS:
        raise InvariantViolation(f"exceptional pair {e!r}, {f!r} with crossing chords")
    i = meet.point
    j, l = ce.other(i), cf.other(i)
    if i < j < l:
        return MutationCase.CASE4, (i, j, l)
    if j < l < i:
        return MutationCase.CASE5, (i, j, l)
    if l < i < j:
        return MutationCase.CASE6, (i, j, l)
    raise InvariantViolation(f"label order (i={i}, j={j}, l={l}) impossible for an exceptional pair")


def _require_pair(e: ShiftedObject, f: ShiftedObject) -> None:
    if e.module == f.module or not is_exceptional_pair(e.module, f.module):
        raise NotExceptionalError(f"({e!r}, {f!r}) is not an exceptional pair", (e.module, f.module))


def _concentration(e: ShiftedObject, f: ShiftedObject) -> int:
    degrees = derived_hom_degrees(e, f)
    if len(degrees) != 1 or sum(degrees.values()) != 1:
        raise InvariantViolation(f"Hom(Sigma^* {e!r}, {f!r}) = {degrees}, expected one degree of dim 1")
    (deg,) = degrees
    return deg


# (uses Hom in degree shift(F)-shift(E), shift offset of L over F, shift offset of R over E)
_CASE_TABLE = {
    MutationCase.CASE4: (True, 0, -1),
    MutationCase.CASE5: (True, 1, 0),
    MutationCase.CASE6: (False, 0, 0),
}


def _mutate(e: ShiftedObject, f: ShiftedObject) -> tuple[MutationCase, Interval, int, int]:
    _require_pair(e, f)
    case, labels = mutation_case(e, f)
    if case is MutationCase.DISJOINT:
        return case, f.module, 0, 0
    _, j, l = labels
    via_hom, l_off, r_off = _CASE_TABLE[case]
    deg = _concentration(e, f)
    expected = f.shift - e.shift - (0 if via_hom else 1)
    if deg != expected:
        raise InvariantViolation(f"{case.value}: Hom concentrated in degree {deg}, expected {expected}")
    return case, Interval(e.n, min(j, l), max(j, l)), l_off, r_off


def module_mutate_left(e: ObjectLike, f: ObjectLike) -> MutationResult:
    """L_E F, the cone of the canonical map from E into F."""
    e, f = as_shifted(e), as_shifted(f)
    case, module, l_off, _ = _mutate(e, f)
    if case is MutationCase.DISJOINT:
        return MutationResult(f, case)
    return MutationResult(ShiftedObject(module, f.shift + l_off), case)


def module_mutate_right(f: ObjectLike, e: ObjectLike) -> MutationResult:
    """R_F E, the fibre of the canonical map from E to copies of F."""
    e, f = as_shifted(e), as_shifted(f)
    case, module, _, r_off = _mutate(e, f)
    if case is MutationCase.DISJOINT:
        return MutationResult(e, case)
    return MutationResult(ShiftedObject(module, e.shift + r_off), case)


@dataclass(frozen=True)
class BraidLetter:
    kind: str  # "s" braid generator, "t" shift generator
    index: int
    inverse: bool = False

    def __str__(self) -> str:
        return f"{self.kind}{self.index}{chr(39) if self.inverse else ''}"

    def inverted(self) -> "BraidLetter":
        return BraidLetter(self.kind, self.index, not self.inverse)

    def check(self, n: int) -> None:
        top = n - 1 if self.kind == "s" else n
        if not 1 <= self.index <= top:
            raise ValueError(f"generator {self} out of range for n={n} (index 1..{top})")


BraidWord = tuple[BraidLetter, ...]
_TOKEN = re.compile(r"([st])(\d+)(')?\Z")


def parse_braid_word(text: str, n: Optional[int] = None) -> BraidWord:
    """Parse ``"s1 s2' t3"``: sK is sigma_K, tK the shift at K, a trailing ``'`` inverts."""
    letters = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad braid token {tok!r}; expected sK, sK', tK or tK'")
        letter = BraidLetter(m.group(1), int(m.group(2)), bool(m.group(3)))
        if n is not None:
            letter.check(n)
        letters.append(letter)
    return tuple(letters)


def format_braid_word(word: Iterable[BraidLetter]) -> str:
    return " ".join(map(str, word))


def apply_letter(letter: BraidLetter, seq: ExceptionalSequence) -> tuple[ExceptionalSequence, Optional[MutationCase]]:
    letter.check(seq.n)
    objs = list(seq.objects)
    k = letter.index - 1
    case = None
    if letter.kind == "t":
        objs[k] = objs[k].shifted(-1 if letter.inverse else 1)
    elif not letter.inverse:
        e, f = objs[k], objs[k + 1]
        res = module_mutate_left(e, f)
        objs[k], objs[k + 1], case = res.object, e, res.case
    else:
        e, f = objs[k], objs[k + 1]
        res = module_mutate_right(f, e)
        objs[k], objs[k + 1], case = f, res.object, res.case
    return ExceptionalSequence(seq.n, tuple(objs)), case


@dataclass(frozen=True)
class TraceStep:
    letter: BraidLetter
    case: Optional[MutationCase]
    sequence: ExceptionalSequence

    def to_json(self) -> dict:
        return {
            "letter": str(self.letter),
            "case": self.case.value if self.case else None,
            "sequence": self.sequence.to_json(),
        }


def braid_trace(word: Union[str, Iterable[BraidLetter]], seq: ExceptionalSequence) -> list[TraceStep]:
    if isinstance(word, str):
        word = parse_braid_word(word, seq.n)
    require_complete_exceptional(seq)
    steps = []
    for letter in word:
        seq, case = apply_letter(letter, seq)
        steps.append(TraceStep(letter, case, seq))
    return steps


def braid_apply(word: Union[str, Iterable[BraidLetter]], seq: ExceptionalSequence) -> ExceptionalSequence:
    """Apply the letters of ``word`` left to right."""
    steps = braid_trace(word, seq)
    return steps[-1].sequence if steps else seq


def cyclic_sigma(x: Interval) -> Interval:
    """AR translate on non-projectives, Nakayama functor on projectives."""
    if x.i != 0:
        return Interval(x.n, x.i - 1, x.j - 1)
    return Interval(x.n, x.j - 1, x.n)


def cyclic_apply(seq: ExceptionalSequence) -> ExceptionalSequence:
    require_complete_exceptional(seq)
    return ExceptionalSequence(seq.n, tuple(ShiftedObject(cyclic_sigma(x.module), x.shift) for x in seq.objects))


def default_generators(n: int) -> list[BraidLetter]:
    return [BraidLetter("s", k, inv) for k in range(1, n) for inv in (False, True)]


def orbit_classes(
    start: ExceptionalSequence, generators: Optional[Iterable[Union[str, BraidLetter]]] = None
) -> set[tuple[Interval, ...]]:
    """Class keys reachable from ``start`` under ``generators`` (default all sigma_k^{+-1}).

    The search runs over shift-free module sequences, which form a finite set;
    shifts never change the modules produced by a mutation.
    """
    require_complete_exceptional(start)
    n = start.n
    if generators is None:
        gens = default_generators(n)
    else:
        gens = [parse_braid_word(g, n)[0] if isinstance(g, str) else g for g in generators]
        for g in gens:
            g.check(n)
    root = tuple(start.modules)
    seen = {root}
    queue = deque([root])
    while queue:
        mods = queue.popleft()
        seq = ExceptionalSequence(n, tuple(ShiftedObject(m) for m in mods))
        for g in gens:
            nxt = tuple(apply_letter(g, seq)[0].modules)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return {tuple(sorted(m)) for m in seen}
