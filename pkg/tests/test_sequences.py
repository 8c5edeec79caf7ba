from __future__ import annotations

import functools
import itertools

import pytest

from exseq.chords import nc_tree_count
from exseq.errors import NotExceptionalError
from exseq.quiver import Interval, ShiftedObject, ext_dim_oracle, hom_dim_oracle, indecomposables
from exseq.sequences import (
    ExceptionalSequence,
    PairRelation,
    class_key,
    count_complete_sequences,
    enumerate_complete_sequences,
    geometric_pair_relation,
    is_exceptional_pair,
    is_exceptional_sequence,
    pair_relation,
    sequence_count,
)


def X(i, j, n=3):
    return Interval(n, i, j)


def S(n, *pairs):
    return ExceptionalSequence.of(n, *pairs)


@functools.lru_cache(maxsize=None)
def oracle_pair(e, f):
    return hom_dim_oracle(f, e) == 0 and ext_dim_oracle(f, e) == 0


def brute_force_sequences(n):
    """Ordered n-tuples of distinct modules, pairwise exceptional per the linear-algebra oracle."""
    out = []
    for perm in itertools.permutations(indecomposables(n), n):
        if all(oracle_pair(perm[a], perm[b]) for a in range(n) for b in range(a + 1, n)):
            out.append(perm)
    return out


class TestPairs:
    def test_examples(self):
        assert is_exceptional_pair(X(0, 1), X(0, 2))
        assert not is_exceptional_pair(X(0, 2), X(0, 1))
        assert is_exceptional_pair(X(0, 1), X(2, 3)) and is_exceptional_pair(X(2, 3), X(0, 1))

    def test_self_pair_rejected(self):
        with pytest.raises(ValueError):
            is_exceptional_pair(X(0, 1), X(0, 1))

    def test_relation_examples(self):
        assert pair_relation(X(0, 2), X(1, 3)) is PairRelation.NEITHER_ORDER
        assert pair_relation(X(0, 1), X(0, 2)) is PairRelation.ONLY_FIRST_SECOND
        assert pair_relation(X(0, 1), X(2, 3)) is PairRelation.BOTH_ORDERS

    def test_relation_rejects_equal(self):
        with pytest.raises(ValueError):
            pair_relation(X(0, 1), X(0, 1))

    def test_shifts_ignored(self):
        assert is_exceptional_pair(ShiftedObject(X(0, 1), 4), ShiftedObject(X(0, 2), -1))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_algebraic_matches_geometric(self, n):
        for x, y in itertools.combinations(indecomposables(n), 2):
            assert pair_relation(x, y) == geometric_pair_relation(x, y), (x, y)
            assert pair_relation(y, x) == geometric_pair_relation(y, x), (y, x)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_reversal_asymmetry(self, n):
        for x, y in itertools.permutations(indecomposables(n), 2):
            if pair_relation(x, y) is PairRelation.ONLY_FIRST_SECOND:
                assert pair_relation(y, x) is PairRelation.ONLY_SECOND_FIRST


class TestSequencePredicate:
    def test_examples(self):
        assert is_exceptional_sequence(S(3, (0, 1), (0, 2), (0, 3)))
        assert is_exceptional_sequence(S(3, (0, 3), (1, 3), (2, 3)))
        assert not is_exceptional_sequence(S(3, (0, 2), (0, 1), (0, 3)))

    def test_duplicate_fails(self):
        assert not is_exceptional_sequence(S(3, (0, 1), (0, 1)))

    def test_too_long_rejected(self):
        with pytest.raises(ValueError):
            S(2, (0, 1), (0, 2), (1, 2))


class TestEnumeration:
    def test_n1(self):
        assert list(enumerate_complete_sequences(1)) == [S(1, (0, 1))]

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 3), (3, 16), (4, 125), (5, 1296)])
    def test_counts(self, n, count):
        seqs = list(enumerate_complete_sequences(n))
        assert len(seqs) == count == sequence_count(n) == count_complete_sequences(n)
        assert len(set(seqs)) == count

    @pytest.mark.parametrize("n", range(1, 5))
    def test_matches_oracle_brute_force(self, n):
        got = [s.modules for s in enumerate_complete_sequences(n)]
        assert got == brute_force_sequences(n)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_lexicographic_and_shift_free(self, n):
        seqs = list(enumerate_complete_sequences(n))
        assert [s.modules for s in seqs] == sorted(s.modules for s in seqs)
        assert all(set(s.shifts) == {0} for s in seqs)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_prefix_closure(self, n):
        for s in enumerate_complete_sequences(n):
            for k in range(len(s) + 1):
                assert is_exceptional_sequence(ExceptionalSequence(n, s.objects[:k]))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_class_count_is_tree_count(self, n):
        keys = {class_key(s) for s in enumerate_complete_sequences(n)}
        assert len(keys) == nc_tree_count(n)

    def test_parallel_matches_serial(self):
        assert list(enumerate_complete_sequences(5, jobs=3)) == list(enumerate_complete_sequences(5))

    def test_sequence_count_values(self):
        assert [sequence_count(n) for n in (1, 3, 4)] == [1, 16, 125]


class TestClassKey:
    def test_examples(self):
        a = S(3, (0, 3), (1, 2), (1, 3))
        b = S(3, (1, 2), (0, 3), (1, 3))
        assert class_key(a) == class_key(b)
        assert class_key(S(3, (0, 1), (0, 2), (0, 3))) == (X(0, 1), X(0, 2), X(0, 3))
        shifted = ExceptionalSequence(
            3, (ShiftedObject(X(0, 1), 1), ShiftedObject(X(0, 2)), ShiftedObject(X(0, 3)))
        )
        assert class_key(shifted) == class_key(S(3, (0, 1), (0, 2), (0, 3)))

    def test_rejects_non_exceptional(self):
        with pytest.raises(NotExceptionalError) as info:
            class_key(S(3, (0, 2), (0, 1), (0, 3)))
        assert info.value.pair == (X(0, 2), X(0, 1))

    def test_rejects_incomplete(self):
        with pytest.raises(ValueError):
            class_key(S(3, (0, 1), (0, 2)))


def test_json_round_trip():
    s = ExceptionalSequence(3, (ShiftedObject(X(0, 1), 2), ShiftedObject(X(0, 2)), ShiftedObject(X(0, 3))))
    doc = s.to_json()
    assert doc == {
        "n": 3,
        "objects": [{"i": 0, "j": 1, "shift": 2}, {"i": 0, "j": 2, "shift": 0}, {"i": 0, "j": 3, "shift": 0}],
    }
    assert ExceptionalSequence.from_json(doc) == s
