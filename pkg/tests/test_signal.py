"""Signal layer: validation, window sums, conversions, JSON round trips."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hlmax.errors import ParameterViolation, ZeroSignal
from hlmax.signal import (
    Block,
    BlockSignal,
    DenseSignal,
    PowerLaw,
    eval_at,
    norm_l1,
    reflect,
    scale,
    signal_from_json,
    signal_to_json,
    support_bounds,
    to_blocks,
    to_dense,
    translate,
    window_sum,
)

amp_st = st.fractions(min_value=Fraction(0), max_value=Fraction(4), max_denominator=12)
values_st = st.lists(amp_st, min_size=1, max_size=40).filter(lambda vs: any(vs))


def dense(lo, vals):
    return DenseSignal(lo, [Fraction(v) for v in vals])


class TestConstruction:
    def test_zero_signal_rejected(self):
        with pytest.raises(ZeroSignal):
            DenseSignal(0, [Fraction(0), Fraction(0)])

    def test_negative_rejected(self):
        with pytest.raises(ParameterViolation):
            DenseSignal(0, [Fraction(-1)])
        with pytest.raises(ParameterViolation):
            Block(0, 3, Fraction(-1, 2))

    def test_zero_trim(self):
        s = dense(5, [0, 0, 1, 2, 0])
        assert support_bounds(s) == (7, 8)

    def test_block_overlap_rejected(self):
        with pytest.raises(ParameterViolation):
            BlockSignal([Block(0, 5, Fraction(1)), Block(5, 9, Fraction(2))])

    def test_block_bad_range_rejected(self):
        with pytest.raises(ParameterViolation):
            Block(4, 3, Fraction(1))

    def test_adjacent_equal_blocks_merge(self):
        s = BlockSignal([Block(0, 3, Fraction(1, 2)), Block(4, 9, Fraction(1, 2))])
        assert len(s.blocks) == 1
        assert (s.blocks[0].start, s.blocks[0].end) == (0, 9)

    def test_powerlaw_needs_positive_start(self):
        with pytest.raises(ParameterViolation):
            BlockSignal([Block(0, 5, PowerLaw(Fraction(1, 2)))])
        BlockSignal([Block(1, 5, PowerLaw(Fraction(1, 2)))])  # fine

    def test_powerlaw_alpha_range(self):
        with pytest.raises(ParameterViolation):
            PowerLaw(Fraction(1))
        with pytest.raises(ParameterViolation):
            PowerLaw(Fraction(0))


class TestWindowSums:
    @given(values_st, st.integers(-30, 30), st.data())
    @settings(max_examples=80)
    def test_additivity(self, vals, lo, data):
        sig = DenseSignal(lo, vals)
        a = data.draw(st.integers(lo - 5, lo + len(vals) + 5))
        c = data.draw(st.integers(a, lo + len(vals) + 10))
        b = data.draw(st.integers(a, c))
        left = window_sum(sig, a, b)
        right = window_sum(sig, b + 1, c) if b < c else Fraction(0)
        assert left + right == window_sum(sig, a, c)

    @given(values_st, st.integers(-30, 30))
    @settings(max_examples=60)
    def test_matches_pointwise(self, vals, lo):
        sig = DenseSignal(lo, vals)
        a, b = lo - 2, lo + len(vals) + 2
        assert window_sum(sig, a, b) == sum(
            (eval_at(sig, n) for n in range(a, b + 1)), Fraction(0)
        )

    @given(values_st, st.integers(-30, 30))
    @settings(max_examples=60)
    def test_block_dense_agree(self, vals, lo):
        sig = DenseSignal(lo, vals)
        blocks = to_blocks(sig)
        a, b = lo - 3, lo + len(vals) + 3
        for n in range(a, b + 1):
            assert eval_at(sig, n) == eval_at(blocks, n)
        assert window_sum(sig, a, b) == window_sum(blocks, a, b)
        assert norm_l1(sig) == norm_l1(blocks)

    def test_norm_is_full_window(self):
        s = dense(-3, [1, 0, 2, Fraction(1, 3)])
        assert norm_l1(s) == Fraction(1) + 2 + Fraction(1, 3)


class TestConversions:
    @given(values_st, st.integers(-20, 20))
    @settings(max_examples=60)
    def test_round_trip(self, vals, lo):
        sig = DenseSignal(lo, vals)
        back = to_dense(to_blocks(sig))
        assert support_bounds(back) == support_bounds(sig)
        s_lo, s_hi = support_bounds(sig)
        for n in range(s_lo, s_hi + 1):
            assert eval_at(back, n) == eval_at(sig, n)

    def test_to_dense_refuses_powerlaw(self):
        s = BlockSignal([Block(1, 5, PowerLaw(Fraction(1, 2)))])
        with pytest.raises(ParameterViolation):
            to_dense(s)


class TestTransforms:
    @given(values_st, st.integers(-20, 20), st.integers(-15, 15))
    @settings(max_examples=50)
    def test_translate(self, vals, lo, t):
        sig = DenseSignal(lo, vals)
        moved = translate(sig, t)
        s_lo, s_hi = support_bounds(sig)
        for n in range(s_lo - 2, s_hi + 3):
            assert eval_at(moved, n + t) == eval_at(sig, n)

    @given(values_st, st.integers(-20, 20))
    @settings(max_examples=50)
    def test_reflect(self, vals, lo):
        sig = DenseSignal(lo, vals)
        mirrored = reflect(sig)
        s_lo, s_hi = support_bounds(sig)
        for n in range(s_lo - 2, s_hi + 3):
            assert eval_at(mirrored, -n) == eval_at(sig, n)

    @given(values_st, st.integers(-20, 20))
    @settings(max_examples=50)
    def test_scale(self, vals, lo):
        sig = DenseSignal(lo, vals)
        doubled = scale(sig, Fraction(2, 3))
        s_lo, s_hi = support_bounds(sig)
        for n in range(s_lo, s_hi + 1):
            assert eval_at(doubled, n) == Fraction(2, 3) * eval_at(sig, n)

    def test_scale_rejects_nonpositive(self):
        with pytest.raises(ParameterViolation):
            scale(dense(0, [1]), Fraction(0))

    def test_powerlaw_transform_rejected(self):
        s = BlockSignal([Block(1, 5, PowerLaw(Fraction(1, 2)))])
        with pytest.raises(ParameterViolation):
            translate(s, 3)
        with pytest.raises(ParameterViolation):
            reflect(s)
        with pytest.raises(ParameterViolation):
            scale(s, Fraction(2))


class TestJson:
    def test_dense_round_trip(self):
        sig = dense(-4, [1, Fraction(2, 3), 0, 5])
        doc = signal_to_json(sig)
        back = signal_from_json(doc)
        assert isinstance(back, DenseSignal)
        assert support_bounds(back) == support_bounds(sig)
        lo, hi = support_bounds(sig)
        for n in range(lo, hi + 1):
            assert eval_at(back, n) == eval_at(sig, n)

    def test_blocks_round_trip(self):
        sig = BlockSignal(
            [Block(1, 4, PowerLaw(Fraction(3, 5))), Block(10, 12, Fraction(1, 7))]
        )
        back = signal_from_json(signal_to_json(sig))
        assert isinstance(back, BlockSignal)
        assert [(b.start, b.end) for b in back.blocks] == [(1, 4), (10, 12)]
        assert isinstance(back.blocks[0].amp, PowerLaw)
        assert back.blocks[0].amp.alpha == Fraction(3, 5)
        assert back.blocks[1].amp == Fraction(1, 7)

    def test_bad_doc_rejected(self):
        with pytest.raises(ParameterViolation):
            signal_from_json({"type": "nope"})


class TestIntView:
    @given(values_st, st.integers(-20, 20))
    @settings(max_examples=40)
    def test_scaled_consistency(self, vals, lo):
        sig = DenseSignal(lo, vals)
        d, scaled, pref = sig.int_view()
        assert len(scaled) == len(sig.values)
        for v, s in zip(sig.values, scaled):
            assert v * d == s
        assert pref[-1] == norm_l1(sig) * d
