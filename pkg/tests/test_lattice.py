"""Ground types: exponent vectors, generator slices, pinch validation."""

from math import comb

import pytest
from hypothesis import given, strategies as st

from veropinch import (
    ExponentVector,
    InvalidSpecError,
    SpecKind,
    perturb,
    pinch_spec,
    veronese_generators,
)


class TestExponentVector:
    def test_degree_and_max(self):
        v = ExponentVector((3, 1, 0))
        assert v.degree() == 4
        assert v.max_entry() == 3

    def test_rejects_short_vectors(self):
        with pytest.raises(InvalidSpecError):
            ExponentVector((5,))

    def test_rejects_negative_coordinates(self):
        with pytest.raises(InvalidSpecError):
            ExponentVector((1, -1))

    def test_rejects_non_integers(self):
        with pytest.raises(InvalidSpecError):
            ExponentVector((1.5, 2))

    def test_behaves_like_tuple(self):
        v = ExponentVector((1, 2))
        assert v == (1, 2)
        assert hash(v) == hash((1, 2))
        assert v < ExponentVector((1, 3))

    def test_arithmetic(self):
        v = ExponentVector((2, 1))
        assert v.add((1, 1)) == (3, 2)
        assert v.scale(3) == (6, 3)
        assert v.sub_or_none((1, 0)) == (1, 1)
        assert v.sub_or_none((3, 0)) is None


class TestVeroneseGenerators:
    def test_2_4(self):
        gens = veronese_generators(2, 4)
        assert set(map(tuple, gens)) == {(4, 0), (3, 1), (2, 2), (1, 3), (0, 4)}

    def test_3_2(self):
        gens = veronese_generators(3, 2)
        assert set(map(tuple, gens)) == {
            (2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1),
        }

    def test_3_3_contains_interior_point(self):
        gens = veronese_generators(3, 3)
        assert len(gens) == 10
        assert ExponentVector((1, 1, 1)) in gens

    @pytest.mark.parametrize("n", range(2, 6))
    @pytest.mark.parametrize("d", range(2, 7))
    def test_cardinality_is_binomial(self, n, d):
        assert len(veronese_generators(n, d)) == comb(d + n - 1, n - 1)

    def test_every_member_has_degree_d(self):
        for g in veronese_generators(4, 3):
            assert g.degree() == 3

    @pytest.mark.parametrize("n,d", [(1, 3), (2, 1), (0, 2), (2, 0)])
    def test_rejects_degenerate_parameters(self, n, d):
        with pytest.raises(InvalidSpecError):
            veronese_generators(n, d)


class TestPerturb:
    def test_interior_point(self):
        assert perturb((1, 1, 1), 0, 1) == (2, 0, 1)

    def test_plane_point(self):
        assert perturb((3, 1), 1, 0) == (2, 2)

    def test_rejects_empty_source_coordinate(self):
        with pytest.raises(InvalidSpecError):
            perturb((0, 4), 1, 0)

    def test_rejects_equal_positions(self):
        with pytest.raises(InvalidSpecError):
            perturb((1, 1), 0, 0)

    @given(
        st.lists(st.integers(min_value=0, max_value=9), min_size=2, max_size=6),
        st.data(),
    )
    def test_inverse_perturbation(self, coords, data):
        n = len(coords)
        i = data.draw(st.integers(0, n - 1))
        j = data.draw(st.integers(0, n - 1))
        if i == j or coords[j] < 1:
            return
        v = ExponentVector(coords)
        assert perturb(perturb(v, i, j), j, i) == v

    def test_degree_preserved(self):
        v = ExponentVector((2, 3, 1))
        assert perturb(v, 2, 1).degree() == v.degree()


class TestPinchSpec:
    def test_single_pinch(self):
        spec = pinch_spec(3, 3, [(1, 1, 1)])
        assert spec.kind is SpecKind.SINGLE_PINCH
        assert len(spec.generators()) == 9
        assert spec.pinched() == (1, 1, 1)

    def test_empty_removal_is_full_slice(self):
        spec = pinch_spec(2, 4, [])
        assert spec.kind is SpecKind.FULL_VERONESE
        assert len(spec.generators()) == 5

    def test_multipinch_rejects_large_entries(self):
        # (1,3) carries the entry d-1 = 3 and must stay in place
        with pytest.raises(InvalidSpecError):
            pinch_spec(2, 4, [(2, 2), (1, 3)])
        with pytest.raises(InvalidSpecError):
            pinch_spec(3, 3, [(2, 1, 0), (1, 1, 1)])

    def test_multipinch_rejects_degree_two(self):
        with pytest.raises(InvalidSpecError):
            pinch_spec(4, 2, [(1, 1, 0, 0)], multipinch=True)

    def test_valid_multipinch(self):
        spec = pinch_spec(3, 4, [(2, 2, 0), (2, 1, 1)])
        assert spec.kind is SpecKind.MULTI_PINCH
        assert len(spec.generators()) == 13

    def test_forced_multipinch_with_one_vector(self):
        spec = pinch_spec(3, 3, [(1, 1, 1)], multipinch=True)
        assert spec.kind is SpecKind.MULTI_PINCH

    def test_rejects_wrong_degree(self):
        with pytest.raises(InvalidSpecError):
            pinch_spec(2, 4, [(2, 1)])

    def test_rejects_wrong_arity(self):
        with pytest.raises(InvalidSpecError):
            pinch_spec(3, 4, [(2, 2)])

    def test_generators_all_have_degree_d(self):
        spec = pinch_spec(3, 4, [(2, 2, 0)])
        assert all(g.degree() == 4 for g in spec.generators())

    def test_duplicate_removals_collapse(self):
        spec = pinch_spec(2, 4, [(2, 2), (2, 2)])
        assert spec.kind is SpecKind.SINGLE_PINCH
