from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exseq.quiver import (
    Interval,
    RegionKind,
    ShiftedObject,
    derived_hom_degrees,
    dim_vector,
    euler_form,
    ext_dim,
    ext_dim_oracle,
    hom_dim,
    hom_dim_oracle,
    hom_region,
    indecomposables,
)


def X(i, j, n=3):
    return Interval(n, i, j)


@st.composite
def intervals(draw, max_n=8, n=None):
    n = n if n is not None else draw(st.integers(1, max_n))
    i = draw(st.integers(0, n - 1))
    j = draw(st.integers(i + 1, n))
    return Interval(n, i, j)


@st.composite
def interval_pairs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    return draw(intervals(n=n)), draw(intervals(n=n))


def count_morphisms_mod_p(x: Interval, y: Interval, p: int) -> int:
    """Brute force: count vertexwise scalar families over GF(p) commuting with both structures."""
    dx, dy = dim_vector(x), dim_vector(y)
    n = x.n
    count = 0
    for phi in itertools.product(range(p), repeat=n):
        if any(phi[v] and not (dx[v] and dy[v]) for v in range(n)):
            continue
        ok = True
        for v in range(n - 1):  # arrow from vertex v+2 to v+1 (0-based v+1 -> v)
            xm = dx[v] and dx[v + 1]
            ym = dy[v] and dy[v + 1]
            if (ym * phi[v + 1] - phi[v] * xm) % p:
                ok = False
                break
        if ok:
            count += 1
    return count


class TestIndecomposables:
    def test_n1(self):
        assert indecomposables(1) == [Interval(1, 0, 1)]

    def test_n3_lists_six(self):
        assert [(x.i, x.j) for x in indecomposables(3)] == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

    @pytest.mark.parametrize("n", range(1, 9))
    def test_count_against_double_loop(self, n):
        pairs = [(i, j) for i in range(n + 1) for j in range(n + 1) if i < j]
        got = indecomposables(n)
        assert len(got) == len(pairs) == n * (n + 1) // 2
        assert sorted(got) == got and len(set(got)) == len(got)

    def test_rank_zero_rejected(self):
        with pytest.raises(ValueError):
            indecomposables(0)

    @pytest.mark.parametrize("i,j", [(0, 0), (2, 1), (-1, 2), (0, 4)])
    def test_bad_interval(self, i, j):
        with pytest.raises(ValueError):
            Interval(3, i, j)


class TestDimVector:
    def test_examples(self):
        assert dim_vector(X(0, 3)) == (1, 1, 1)
        assert dim_vector(X(1, 2)) == (0, 1, 0)
        assert dim_vector(Interval(1, 0, 1)) == (1,)


class TestHomExt:
    def test_hom_examples(self):
        assert hom_dim(X(0, 1), X(0, 3)) == 1
        assert hom_dim(X(0, 1), X(1, 2)) == 0

    def test_ext_example(self):
        assert ext_dim(X(1, 2), X(0, 1)) == 1

    @pytest.mark.parametrize("n", range(1, 7))
    def test_projective_x01_has_no_ext(self, n):
        x = Interval(n, 0, 1)
        assert all(ext_dim(x, y) == 0 for y in indecomposables(n))

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            hom_dim(Interval(2, 0, 1), Interval(3, 0, 1))
        with pytest.raises(ValueError):
            ext_dim(Interval(2, 0, 1), Interval(3, 0, 1))

    @given(intervals())
    def test_every_indecomposable_is_exceptional(self, x):
        assert hom_dim(x, x) == 1
        assert ext_dim(x, x) == 0


class TestRegions:
    def test_examples(self):
        assert hom_region(X(0, 1), RegionKind.HOM_OUT) == {X(0, 1), X(0, 2), X(0, 3)}
        assert hom_region(X(2, 3), RegionKind.EXT_IN) == set()
        assert hom_region(X(1, 2), RegionKind.HOM_IN) == {X(0, 2), X(1, 2)}

    @given(interval_pairs())
    def test_duality(self, pair):
        x, y = pair
        assert (y in hom_region(x, RegionKind.HOM_OUT)) == (x in hom_region(y, RegionKind.HOM_IN))
        assert (y in hom_region(x, RegionKind.EXT_OUT)) == (x in hom_region(y, RegionKind.EXT_IN))

    @given(intervals())
    def test_translate_identity(self, x):
        if x.i == 0:
            return
        assert hom_region(x, RegionKind.EXT_OUT) == hom_region(Interval(x.n, x.i - 1, x.j - 1), RegionKind.HOM_IN)

    @given(interval_pairs())
    def test_regions_match_dims(self, pair):
        x, y = pair
        assert (y in hom_region(x, RegionKind.HOM_OUT)) == bool(hom_dim(x, y))
        assert (y in hom_region(x, RegionKind.EXT_OUT)) == bool(ext_dim(x, y))


class TestOracle:
    def test_examples(self):
        assert hom_dim_oracle(X(0, 1), X(0, 3)) == 1
        assert hom_dim_oracle(X(0, 1), X(1, 2)) == 0
        for x in indecomposables(4):
            assert hom_dim_oracle(x, x) == 1

    @pytest.mark.parametrize("n", range(1, 6))
    @pytest.mark.parametrize("p", [2, 3])
    def test_oracle_matches_brute_force_over_small_fields(self, n, p):
        # |Hom| = p ** dim, independently of the field
        for x, y in itertools.product(indecomposables(n), repeat=2):
            assert count_morphisms_mod_p(x, y, p) == p ** hom_dim_oracle(x, y)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_closed_forms_match_oracle(self, n):
        for x, y in itertools.product(indecomposables(n), repeat=2):
            assert hom_dim(x, y) == hom_dim_oracle(x, y)
            assert ext_dim(x, y) == ext_dim_oracle(x, y)
            assert ext_dim_oracle(x, y) in (0, 1)


class TestEulerForm:
    def test_examples(self):
        assert euler_form(dim_vector(X(0, 1)), dim_vector(X(0, 1))) == 1
        assert euler_form(dim_vector(X(1, 2)), dim_vector(X(0, 1))) == -1
        for n in range(1, 6):
            d = dim_vector(Interval(n, 0, n))
            assert euler_form(d, d) == 1

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            euler_form((1, 0), (1, 0, 0))


class TestDerivedHom:
    def test_examples(self):
        assert derived_hom_degrees(ShiftedObject(X(0, 1)), ShiftedObject(X(0, 3))) == {0: 1}
        assert derived_hom_degrees(ShiftedObject(X(1, 2)), ShiftedObject(X(0, 1))) == {-1: 1}
        assert derived_hom_degrees(ShiftedObject(X(1, 2), 1), ShiftedObject(X(0, 1))) == {-2: 1}

    @given(interval_pairs(), st.integers(-5, 5), st.integers(-5, 5))
    def test_total_at_most_one(self, pair, a, b):
        x, y = pair
        degs = derived_hom_degrees(ShiftedObject(x, a), ShiftedObject(y, b))
        assert sum(degs.values()) <= 1
        # shifting both sides together leaves the degrees unchanged
        assert degs == derived_hom_degrees(ShiftedObject(x, a + 3), ShiftedObject(y, b + 3))


def test_json_round_trip():
    s = ShiftedObject(X(1, 3), -2)
    assert s.to_json() == {"i": 1, "j": 3, "shift": -2}
    assert ShiftedObject.from_json(3, s.to_json()) == s
    assert Interval.from_json(3, X(0, 2).to_json()) == X(0, 2)
