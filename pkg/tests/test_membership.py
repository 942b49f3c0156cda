"""Membership engine: memoized search vs layer enumeration."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from veropinch import (
    Decomposition,
    ResourceLimitError,
    decompose,
    is_member,
    layer_members,
    pinch_spec,
    reset_membership_cache,
    weak_compositions,
)
from veropinch.membership import _full_layer_codes, _layer_step, _pack


class TestIsMember:
    def test_generator_is_member(self):
        spec = pinch_spec(2, 4, [(2, 2)])
        assert is_member((3, 1), spec)

    def test_removed_vector_is_not(self):
        spec = pinch_spec(2, 4, [(2, 2)])
        assert not is_member((2, 2), spec)

    def test_line_gap_vector_is_not(self):
        spec = pinch_spec(2, 4, [(3, 1)])
        assert not is_member((7, 1), spec)

    def test_explicit_two_part_sum(self):
        spec = pinch_spec(2, 4, [(3, 1)])
        assert is_member((6, 2), spec)  # (4,0) + (2,2)

    def test_wrong_degree_is_false_not_error(self):
        spec = pinch_spec(2, 4, [(2, 2)])
        assert not is_member((3, 2), spec)

    def test_zero_is_member(self):
        spec = pinch_spec(2, 4, [(2, 2)])
        assert is_member((0, 0), spec)

    def test_full_slice_membership_is_degree_divisibility(self):
        # with nothing removed, membership is exactly degree = 0 mod d,
        # checked on the whole box of coordinates up to 4d
        for n, d in ((2, 2), (2, 3), (3, 2), (3, 3)):
            spec = pinch_spec(n, d, [])
            for v in itertools.product(range(4 * d + 1), repeat=n):
                assert is_member(v, spec) == (sum(v) % d == 0), v


class TestLayerMembers:
    def test_layer_zero(self):
        spec = pinch_spec(2, 2, [(1, 1)])
        assert layer_members(spec, 0) == ((0, 0),)

    def test_layer_one_is_the_generators(self):
        spec = pinch_spec(3, 3, [(1, 1, 1)])
        assert set(layer_members(spec, 1)) == set(spec.generators())

    def test_layer_two_even_slice(self):
        spec = pinch_spec(2, 2, [(1, 1)])
        assert set(layer_members(spec, 2)) == {(4, 0), (2, 2), (0, 4)}

    def test_full_layer_shortcut_matches_stepwise_sums(self):
        # the composition shortcut for unpinched layers agrees with the DP
        for n, d in ((2, 3), (3, 2), (3, 3)):
            gens = tuple(_pack(g) for g in pinch_spec(n, d, []).generators())
            codes = frozenset([0])
            for t in range(1, 5):
                codes = _layer_step(codes, gens)
                assert codes == _full_layer_codes(n, d, t)

    @pytest.mark.parametrize(
        "spec",
        [
            pinch_spec(2, 4, [(3, 1)]),
            pinch_spec(2, 2, [(1, 1)]),
            pinch_spec(3, 3, [(1, 1, 1)]),
            pinch_spec(3, 3, [(2, 1, 0)]),
        ],
        ids=lambda s: s.describe(),
    )
    def test_membership_matches_layers(self, spec):
        # a degree-td vector is a member iff it appears in layer t, up to 8d
        for t in range(0, 9):
            layer = set(layer_members(spec, t))
            for v in weak_compositions(t * spec.d, spec.n):
                assert is_member(v, spec) == (v in layer), (t, v)


class TestDecompose:
    def test_witness_for_explicit_sum(self):
        spec = pinch_spec(2, 4, [(3, 1)])
        witness = decompose((6, 2), spec)
        assert witness is not None
        assert sorted(map(tuple, witness.parts)) == [(2, 2), (4, 0)]

    def test_absent_for_gap_vectors(self):
        assert decompose((1, 1, 1), pinch_spec(3, 3, [(1, 1, 1)])) is None
        assert decompose((3, 3), pinch_spec(2, 2, [(1, 1)])) is None

    def test_part_count_is_forced(self):
        spec = pinch_spec(2, 3, [(2, 1)])
        witness = decompose((6, 6), spec)
        assert witness is not None
        assert len(witness.parts) == 4

    def test_deterministic(self):
        spec = pinch_spec(3, 3, [(1, 1, 1)])
        a = decompose((3, 3, 3), spec)
        reset_membership_cache()
        b = decompose((3, 3, 3), spec)
        assert a.parts == b.parts

    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def test_witness_soundness(self, data):
        spec = pinch_spec(2, 3, [(2, 1)])
        t = data.draw(st.integers(1, 5))
        layer = layer_members(spec, t)
        target = data.draw(st.sampled_from(layer))
        witness = decompose(target, spec)
        assert witness is not None
        gens = set(spec.generators())
        assert all(p in gens for p in witness.parts)
        total = tuple(sum(c) for c in zip(*witness.parts))
        assert total == tuple(target)

    def test_validation_rejects_bad_sum(self):
        from veropinch import ExponentVector, InvalidSpecError

        with pytest.raises(InvalidSpecError):
            Decomposition(
                parts=(ExponentVector((2, 0)),), target=ExponentVector((1, 1))
            )


class TestMonotonicity:
    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def test_sum_of_members_is_member(self, data):
        spec = pinch_spec(2, 4, [(3, 1)])
        e = data.draw(st.sampled_from(layer_members(spec, data.draw(st.integers(1, 4)))))
        f = data.draw(st.sampled_from(layer_members(spec, data.draw(st.integers(1, 4)))))
        assert is_member(e.add(f), spec)


class TestMemoCap:
    def test_cap_overflow_is_an_explicit_failure(self, monkeypatch):
        monkeypatch.setenv("VEROPINCH_MEMO_CAP", "8")
        reset_membership_cache()
        spec = pinch_spec(3, 3, [(1, 1, 1)])
        with pytest.raises(ResourceLimitError):
            is_member((9, 9, 9), spec)
        monkeypatch.delenv("VEROPINCH_MEMO_CAP")
        reset_membership_cache()
        assert is_member((9, 9, 9), spec)

    def test_bad_cap_value_rejected(self, monkeypatch):
        from veropinch import InvalidSpecError

        monkeypatch.setenv("VEROPINCH_MEMO_CAP", "not-a-number")
        reset_membership_cache()
        with pytest.raises(InvalidSpecError):
            is_member((3, 3, 3), pinch_spec(3, 3, [(1, 1, 1)]))
        monkeypatch.delenv("VEROPINCH_MEMO_CAP")
        reset_membership_cache()
