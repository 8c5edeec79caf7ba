"""Intervals to chords, and complete exceptional sequences to non-crossing spanning trees."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .chords import Chord, NCTree, enumerate_nc_trees, is_nc_spanning_tree
from .errors import InvariantViolation
from .quiver import Interval, ObjectLike, ShiftedObject, module_of
from .sequences import (
    ExceptionalSequence,
    PairRelation,
    class_key_json,
    enumerate_complete_sequences,
    group_by_class,
    is_exceptional_sequence,
    pair_relation,
    require_complete_exceptional,
)


def phi(x: ObjectLike) -> Chord:
    """X(i, j) -> c(i, j); shifts are forgotten."""
    m = module_of(x)
    return Chord(m.n, m.i, m.j)


def phi_inverse(c: Chord) -> Interval:
    return Interval(c.n, c.p, c.q)


def tree_of_sequence(seq: ExceptionalSequence) -> NCTree:
    require_complete_exceptional(seq)
    tree = NCTree(seq.n, tuple(phi(x) for x in seq.objects))
    check = is_nc_spanning_tree(tree.chords, seq.n)
    if not check:
        raise InvariantViolation(f"{seq!r} maps to a non-tree: {check.reason} {check.detail}")
    return tree


def sequence_from_tree(tree: NCTree) -> ExceptionalSequence:
    """Order the chords of ``tree`` into a complete exceptional sequence.

    Greedy: repeatedly take the smallest remaining module that forms an
    exceptional pair with every other remaining module.
    """
    check = is_nc_spanning_tree(tree.chords, tree.n)
    if not check:
        raise ValueError(f"not a non-crossing spanning tree ({check.reason}): {check.detail}")
    remaining = sorted(phi_inverse(c) for c in tree.chords)
    ordered: list[Interval] = []
    while remaining:
        pick = next(
            (
                x
                for x in remaining
                if all(
                    pair_relation(x, y) in (PairRelation.BOTH_ORDERS, PairRelation.ONLY_FIRST_SECOND)
                    for y in remaining
                    if y != x
                )
            ),
            None,
        )
        if pick is None:
            raise InvariantViolation(f"no eligible chord among {remaining!r} in {tree.to_json()}")
        ordered.append(pick)
        remaining.remove(pick)
    return ExceptionalSequence(tree.n, tuple(ShiftedObject(x) for x in ordered))


@dataclass
class BijectionReport:
    n: int
    sequence_count: int = 0
    sequence_class_count: int = 0
    tree_count: int = 0
    matched: bool = False
    missing_trees: list = field(default_factory=list)
    colliding_classes: list = field(default_factory=list)
    non_tree_images: list = field(default_factory=list)
    round_trip_failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)


def verify_bijection(n: int, jobs: int = 1) -> BijectionReport:
    """Exhaustively check that classes of complete sequences biject onto trees.

    Each class is mapped through every member (so a class whose members
    disagree is reported as colliding), images are checked to be trees,
    injectivity and surjectivity are checked against the tree enumeration,
    and ``sequence_from_tree`` is checked to be a section.
    """
    report = BijectionReport(n)
    seqs = list(enumerate_complete_sequences(n, jobs=jobs))
    report.sequence_count = len(seqs)
    classes = group_by_class(seqs)
    report.sequence_class_count = len(classes)

    image: dict[NCTree, list] = {}
    for key, members in classes.items():
        trees = {NCTree(n, tuple(phi(x) for x in s.objects)) for s in members}
        if len(trees) != 1:
            report.colliding_classes.append(class_key_json(key))
            continue
        (t,) = trees
        if not is_nc_spanning_tree(t.chords, n):
            report.non_tree_images.append(t.to_json())
        image.setdefault(t, []).append(class_key_json(key))
    for t, keys in image.items():
        if len(keys) > 1:
            report.colliding_classes.extend(keys)

    all_trees = enumerate_nc_trees(n, jobs=jobs)
    report.tree_count = len(all_trees)
    report.missing_trees = [t.to_json() for t in all_trees if t not in image]

    for t in all_trees:
        try:
            s = sequence_from_tree(t)
            ok = is_exceptional_sequence(s) and tree_of_sequence(s) == t
        except (ValueError, InvariantViolation):
            ok = False
        if not ok:
            report.round_trip_failures.append(t.to_json())

    report.matched = (
        not report.missing_trees
        and not report.colliding_classes
        and not report.non_tree_images
        and not report.round_trip_failures
        and report.sequence_class_count == report.tree_count
    )
    return report
