from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exseq.chords import (
    Chord,
    MeetKind,
    MeetType,
    NCTree,
    all_chords,
    count_nc_trees,
    distance,
    enumerate_nc_trees,
    is_nc_spanning_tree,
    meet_type,
    nc_tree_count,
    rotate_chord,
)

STAR_BRANCH = [(1, 2), (1, 3), (0, 3), (0, 4), (0, 5)]
WITH_CYCLE = [(0, 1), (1, 3), (0, 3), (0, 4), (0, 5)]
WITH_CROSSING = [(0, 2), (1, 3), (0, 3), (0, 4), (0, 5)]


def chords(n, pairs):
    return [Chord(n, p, q) for p, q in pairs]


def _xy(k, n):
    t = 2 * math.pi * k / (n + 1)
    return math.cos(t), math.sin(t)


def segments_cross(c, d):
    """Coordinate oracle: proper intersection of the straight segments."""
    if set(c.endpoints) & set(d.endpoints):
        return False
    a, b = _xy(c.p, c.n), _xy(c.q, c.n)
    u, v = _xy(d.p, d.n), _xy(d.q, d.n)

    def orient(p, q, r):
        return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])

    return orient(a, b, u) * orient(a, b, v) < 0 and orient(u, v, a) * orient(u, v, b) < 0


def brute_force_trees(n):
    """All n-subsets of chords that are connected, acyclic and pairwise non-crossing."""
    out = []
    for subset in itertools.combinations(all_chords(n), n):
        if any(segments_cross(a, b) for a, b in itertools.combinations(subset, 2)):
            continue
        adj = {v: set() for v in range(n + 1)}
        for c in subset:
            adj[c.p].add(c.q)
            adj[c.q].add(c.p)
        seen, stack = {0}, [0]
        while stack:
            for w in adj[stack.pop()] - seen:
                seen.add(w)
                stack.append(w)
        if len(seen) == n + 1:  # n edges, connected on n+1 vertices: a tree
            out.append(NCTree(n, subset))
    return out


@st.composite
def chord_pairs(draw):
    n = draw(st.integers(2, 9))
    cs = all_chords(n)
    a = draw(st.sampled_from(cs))
    b = draw(st.sampled_from([c for c in cs if c != a]))
    return a, b


class TestChord:
    def test_normalised(self):
        assert Chord(3, 2, 0) == Chord(3, 0, 2)
        assert Chord(3, 2, 0).to_json() == [0, 2]

    @pytest.mark.parametrize("p,q", [(1, 1), (0, 4), (-1, 2)])
    def test_invalid(self, p, q):
        with pytest.raises(ValueError):
            Chord(3, p, q)


class TestDistance:
    def test_examples(self):
        assert distance(1, 3, 3) == 2
        assert distance(3, 1, 3) == 2
        assert all(distance(i, i, 5) == 0 for i in range(6))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            distance(0, 4, 3)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_counterclockwise_steps(self, n):
        for i, j in itertools.product(range(n + 1), repeat=2):
            steps, k = 0, i
            while k != j:
                k = (k + 1) % (n + 1)
                steps += 1
            assert distance(i, j, n) == steps


class TestMeetType:
    def test_examples(self):
        assert meet_type(Chord(5, 0, 2), Chord(5, 1, 3)) == MeetType(MeetKind.INTERIOR_CROSS)
        assert meet_type(Chord(3, 0, 1), Chord(3, 2, 3)) == MeetType(MeetKind.DISJOINT)
        assert meet_type(Chord(3, 0, 1), Chord(3, 0, 2)) == MeetType(MeetKind.SHARED_ENDPOINT, 0)

    def test_identical_rejected(self):
        with pytest.raises(ValueError):
            meet_type(Chord(3, 0, 1), Chord(3, 1, 0))

    @given(chord_pairs())
    def test_symmetric(self, pair):
        a, b = pair
        assert meet_type(a, b) == meet_type(b, a)

    @given(chord_pairs())
    def test_matches_coordinates(self, pair):
        a, b = pair
        assert (meet_type(a, b).kind is MeetKind.INTERIOR_CROSS) == segments_cross(a, b)


class TestTreePredicate:
    def test_known_examples(self):
        assert is_nc_spanning_tree(chords(5, STAR_BRANCH), 5)
        bad = is_nc_spanning_tree(chords(5, WITH_CYCLE), 5)
        assert not bad and bad.reason == "cycle"
        bad = is_nc_spanning_tree(chords(5, WITH_CROSSING), 5)
        assert not bad and bad.reason == "crossing"
        assert "c(0,2)" in bad.detail and "c(1,3)" in bad.detail

    def test_wrong_size(self):
        check = is_nc_spanning_tree(chords(3, [(0, 1), (0, 2)]), 3)
        assert not check and check.reason == "size"


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 3), (3, 12), (4, 55), (5, 273), (6, 1428)])
    def test_counts(self, n, count):
        trees = enumerate_nc_trees(n)
        assert len(trees) == count == nc_tree_count(n) == count_nc_trees(n)
        assert len(set(trees)) == len(trees)

    def test_n1(self):
        assert enumerate_nc_trees(1) == [NCTree.from_pairs(1, [(0, 1)])]

    @pytest.mark.parametrize("n", range(1, 5))
    def test_matches_full_subset_scan(self, n):
        assert enumerate_nc_trees(n) == brute_force_trees(n)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_deterministic_sorted_and_valid(self, n):
        trees = enumerate_nc_trees(n)
        assert trees == sorted(trees, key=lambda t: t.chords)
        assert all(is_nc_spanning_tree(t.chords, n) for t in trees)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_rotation_closed(self, n):
        trees = set(enumerate_nc_trees(n))
        assert {t.rotated() for t in trees} == trees

    def test_parallel_matches_serial(self):
        assert enumerate_nc_trees(5, jobs=2) == enumerate_nc_trees(5)


class TestCount:
    def test_values(self):
        assert [nc_tree_count(n) for n in (1, 2, 3, 5)] == [1, 3, 12, 273]

    def test_big_is_exact(self):
        assert nc_tree_count(30) == math.comb(90, 30) // 61
        assert math.comb(90, 30) % 61 == 0


def test_rotation_formula():
    # c(i,j) -> c(i-1,j-1) for i != 0, c(0,j) -> c(j-1,n)
    n = 4
    for c in all_chords(n):
        want = Chord(n, c.p - 1, c.q - 1) if c.p else Chord(n, c.q - 1, n)
        assert rotate_chord(c) == want


def test_tree_json_round_trip():
    t = NCTree.from_pairs(5, STAR_BRANCH)
    assert NCTree.from_json(t.to_json()) == t
    assert t.to_json()["chords"] == sorted(t.to_json()["chords"])
