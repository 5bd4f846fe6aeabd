"""Exact/enclosure arithmetic layer: containment, ordering, parsing."""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hlmax.errors import ParameterViolation
from hlmax.values import (
    DEFAULT_PRECISION,
    Enclosure,
    Ordering,
    compare,
    exact_bounds,
    fraction_to_enclosure,
    iroot,
    ln_of_value,
    ln_value,
    parse_rational,
    pow_of_value,
    power_term,
    rational_str,
    v_add,
    v_div_posint,
    v_mul_frac,
    v_mul_int,
    v_sub,
    value_str,
)

fractions_st = st.fractions(
    min_value=Fraction(-100), max_value=Fraction(100), max_denominator=64
)
pos_fractions_st = st.fractions(
    min_value=Fraction(1, 64), max_value=Fraction(100), max_denominator=64
)


class TestRationalStrings:
    def test_round_trip(self):
        for fr in (Fraction(3, 7), Fraction(-5), Fraction(0), Fraction(22, 4)):
            assert parse_rational(rational_str(fr)) == fr

    def test_plain_integer(self):
        assert parse_rational("17") == Fraction(17)
        assert parse_rational("-4/6") == Fraction(-2, 3)

    def test_garbage_rejected(self):
        with pytest.raises(ParameterViolation):
            parse_rational("3/0")
        with pytest.raises(ParameterViolation):
            parse_rational("a/b")

    def test_value_str_enclosure_uses_dots(self):
        s = value_str(Enclosure(Fraction(1, 3), Fraction(1, 2)))
        assert ".." in s

    def test_value_str_fraction(self):
        assert value_str(Fraction(3, 4)) == "3/4"


class TestEnclosureBasics:
    def test_order_enforced(self):
        with pytest.raises(ParameterViolation):
            Enclosure(mpmath.mpf(2), mpmath.mpf(1))

    def test_exact_bounds_fraction(self):
        lo, hi = exact_bounds(Fraction(5, 3))
        assert lo == hi == Fraction(5, 3)

    @given(fractions_st)
    def test_fraction_to_enclosure_contains(self, fr):
        enc = fraction_to_enclosure(fr, DEFAULT_PRECISION)
        lo, hi = exact_bounds(enc)
        assert lo <= fr <= hi


class TestCompare:
    def test_exact_orderings(self):
        assert compare(Fraction(1), Fraction(2)) is Ordering.LESS
        assert compare(Fraction(2), Fraction(2)) is Ordering.EQUAL
        assert compare(Fraction(3), Fraction(2)) is Ordering.GREATER

    def test_disjoint_enclosures(self):
        a = Enclosure(mpmath.mpf(1), mpmath.mpf(2))
        b = Enclosure(mpmath.mpf(3), mpmath.mpf(4))
        assert compare(a, b) is Ordering.LESS
        assert compare(b, a) is Ordering.GREATER

    def test_overlap_is_indeterminate(self):
        a = Enclosure(mpmath.mpf(1), mpmath.mpf(3))
        b = Enclosure(mpmath.mpf(2), mpmath.mpf(4))
        assert compare(a, b) is Ordering.INDETERMINATE


class TestIntervalArithmetic:
    @given(fractions_st, fractions_st)
    @settings(max_examples=60)
    def test_add_sub_contain_exact(self, x, y):
        ex = fraction_to_enclosure(x, 64)  # coarse precision forces real widths
        ey = fraction_to_enclosure(y, 64)
        for op, true in ((v_add, x + y), (v_sub, x - y)):
            lo, hi = exact_bounds(op(ex, ey, 64))
            assert lo <= true <= hi

    @given(fractions_st, st.integers(min_value=-50, max_value=50))
    @settings(max_examples=60)
    def test_mul_int_contains(self, x, m):
        ex = fraction_to_enclosure(x, 64)
        lo, hi = exact_bounds(v_mul_int(ex, m, 64))
        assert lo <= x * m <= hi

    @given(fractions_st, st.integers(min_value=1, max_value=50))
    @settings(max_examples=60)
    def test_div_posint_contains(self, x, m):
        ex = fraction_to_enclosure(x, 64)
        lo, hi = exact_bounds(v_div_posint(ex, m, 64))
        assert lo <= x / m <= hi

    @given(fractions_st, fractions_st)
    @settings(max_examples=60)
    def test_mul_frac_contains(self, x, f):
        ex = fraction_to_enclosure(x, 64)
        lo, hi = exact_bounds(v_mul_frac(ex, f, 64))
        assert lo <= x * f <= hi


class TestIroot:
    @given(st.integers(min_value=0, max_value=10**24), st.integers(min_value=1, max_value=6))
    @settings(max_examples=80)
    def test_floor_root(self, x, q):
        r = iroot(x, q)
        assert r**q <= x < (r + 1) ** q

    def test_huge_exact(self):
        assert iroot(2**600, 3) == 2**200


class TestPowerTerm:
    def test_one(self):
        assert power_term(1, Fraction(3, 5), DEFAULT_PRECISION) == Fraction(1)

    def test_exact_perfect_power(self):
        # 32^(-3/5) = 2^(-3)
        assert power_term(32, Fraction(3, 5), DEFAULT_PRECISION) == Fraction(1, 8)

    @given(st.integers(min_value=2, max_value=10**6))
    @settings(max_examples=40)
    def test_contains_truth(self, n):
        # lo <= n^(-3/5) <= hi  <=>  lo^5 * n^3 <= 1 <= hi^5 * n^3, exactly
        v = power_term(n, Fraction(3, 5), 128)
        lo, hi = exact_bounds(v)
        assert lo > 0
        assert lo**5 * n**3 <= 1 <= hi**5 * n**3

    def test_precision_nesting(self):
        coarse = exact_bounds(power_term(7, Fraction(1, 3), 80))
        fine = exact_bounds(power_term(7, Fraction(1, 3), 200))
        assert coarse[0] <= fine[0] <= fine[1] <= coarse[1]
        assert fine[1] - fine[0] < coarse[1] - coarse[0]


class TestLogs:
    def test_ln_one_exact(self):
        assert ln_value(Fraction(1), DEFAULT_PRECISION) == Fraction(0)

    def test_ln_two_brackets(self):
        lo, hi = exact_bounds(ln_value(2, DEFAULT_PRECISION))
        assert Fraction(693147, 1000000) < lo < hi < Fraction(693148, 1000000)

    def test_ln_monotone_mapping(self):
        v = Enclosure(mpmath.mpf(2), mpmath.mpf(3))
        lo, hi = exact_bounds(ln_of_value(v, DEFAULT_PRECISION))
        l2 = exact_bounds(ln_value(2, DEFAULT_PRECISION))[0]
        h3 = exact_bounds(ln_value(3, DEFAULT_PRECISION))[1]
        assert lo <= l2 and hi >= h3

    def test_pow_of_value_brackets_sqrt(self):
        lo, hi = exact_bounds(pow_of_value(Fraction(2), Fraction(1, 2), DEFAULT_PRECISION))
        assert lo < Fraction(141422, 100000) and hi > Fraction(141421, 100000)
        assert hi - lo < Fraction(1, 10**60)

    def test_ln_rejects_nonpositive(self):
        with pytest.raises(ParameterViolation):
            ln_value(0, DEFAULT_PRECISION)
