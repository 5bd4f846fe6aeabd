"""Set-size statistics and dichotomy classification of frequency profiles.

For a point n != 0 with minimal centered radius r_n (or minimal uncentered
diameter 2*r~_n), the normalized ratio r_n/|n| (resp. r~_n/|n|) falls into
exactly one window: near zero, near one (near one half uncentered), the
middle band, or above; density_series counts, over {n : 0 < |n| <= N}, the
points with ratio <= 1/C (S), with r_n = 0 (Z), and with ratio within
epsilon of 1 (closed band), and reports the normalized ratios
count_S/N, count_Z/(N/g(N)), count_near1/(2N) exactly or as enclosures.

Counting is pointwise up to a horizon beyond which compact support pins
every ratio (far windows must reach the support, so r_n is within the
support radius of |n|), and closed forms finish the tail; block signals
whose amplitude dominates all foreign mass get exact zero-set counts
structurally without any pointwise work (rows flagged "structural").
Requests beyond the evaluation budget yield rows flagged "partial" instead
of raising, so a series never dies half-way.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .config import DEFAULT_LIMITS, Limits
from .errors import ParameterViolation, ZeroIndex
from .maxengine import CenteredResult, UncenteredResult, event_centered, event_uncentered
from .signal import BlockSignal, DenseSignal, PowerLaw, norm_l1, support_bounds
from .values import Value, int_str, rational_str, v_mul_frac, value_str


class DichotomyClass(enum.Enum):
    """Window of the normalized minimal radius around its structural values."""

    NEAR_ZERO = "NearZero"
    NEAR_ONE = "NearOne"
    NEAR_HALF = "NearHalf"
    MIDDLE = "Middle"
    ABOVE_ONE_PLUS = "AboveOnePlus"
    ABOVE_HALF_PLUS = "AboveHalfPlus"


Record = Union[CenteredResult, UncenteredResult]


def _ratio_of(record: Record, uncentered: Optional[bool]) -> tuple[Fraction, bool]:
    is_unc = isinstance(record, UncenteredResult)
    if uncentered is not None and uncentered != is_unc:
        raise ParameterViolation(
            "uncentered flag does not match the record type"
        )
    n = record.n
    if n == 0:
        raise ZeroIndex("the normalized ratio r_n/|n| is undefined at n = 0")
    if is_unc:
        return Fraction(record.min_diameter, 2 * abs(n)), True
    return Fraction(record.radius, abs(n)), False


def classify(
    record: Record,
    epsilon: Fraction = Fraction(1, 10),
    uncentered: Optional[bool] = None,
) -> DichotomyClass:
    """Exactly one class per point: centered windows are [0,e), [e,1-e],
    (1-e,1+e), [1+e,oo) and need 0 < e < 1/2; uncentered windows sit around
    1/2 instead of 1 and need 0 < e <= 1/4 so they stay disjoint (at
    e = 1/4 the middle band degenerates to the single ratio 1/4)."""
    epsilon = Fraction(epsilon)
    ratio, is_unc = _ratio_of(record, uncentered)
    center = Fraction(1, 2) if is_unc else Fraction(1)
    ok = (0 < epsilon <= Fraction(1, 4)) if is_unc else (0 < epsilon < Fraction(1, 2))
    if not ok:
        bound = "(0, 1/4]" if is_unc else "(0, 1/2)"
        raise ParameterViolation(f"epsilon must lie in {bound} for disjoint windows")
    if ratio < epsilon:
        return DichotomyClass.NEAR_ZERO
    if ratio <= center - epsilon:
        return DichotomyClass.MIDDLE
    if ratio < center + epsilon:
        return DichotomyClass.NEAR_HALF if is_unc else DichotomyClass.NEAR_ONE
    return DichotomyClass.ABOVE_HALF_PLUS if is_unc else DichotomyClass.ABOVE_ONE_PLUS


def sc_membership(record: Record, C: Fraction) -> bool:
    """Exact test of 1/(2C) <= ratio <= 1/C; any rational C > 0 is accepted
    (the C = 1 boundary is a meaningful case)."""
    C = Fraction(C)
    if C <= 0:
        raise ParameterViolation("C must be positive")
    ratio, _ = _ratio_of(record, None)
    return Fraction(1, 2) / C <= ratio <= 1 / C


@dataclass
class DensityRow:
    """Counts over {n : 0 < |n| <= N} and their normalized ratios.

    count_S: ratio <= 1/C; count_Z: minimal radius 0; count_near1: ratio in
    the closed band [1-epsilon, 1+epsilon].  Fields are None when the row's
    method cannot produce them (structural rows count only Z; partial rows
    count nothing).  flags: "" exact pointwise, "structural", or "partial"."""

    N: int
    count_S: Optional[int]
    count_Z: Optional[int]
    count_near1: Optional[int]
    ratio_S_over_N: Optional[Value]
    ratio_Z_over_NoverG: Optional[Value]
    ratio_near1_over_2N: Optional[Value]
    flags: str = ""


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _structural_zero_blocks(sig: BlockSignal) -> Optional[list]:
    """Blocks where amplitude dominance forces Mf = f pointwise, hence
    minimal radius 0 on the whole block; None unless every block qualifies.

    A window centered in block k either stays within distance d of the
    block (seeing only amplitude a_k and zeros, so averaging <= a_k) or has
    radius >= d_min and averages at most ||f||_1/(2 d_min + 1) <= a_k."""
    for b in sig.blocks:
        if isinstance(b.amp, PowerLaw):
            return None
    total = norm_l1(sig)
    spans = [(b.start, b.end, b.amp) for b in sig.blocks]
    for i, (s, e, a) in enumerate(spans):
        gaps = []
        if i > 0:
            gaps.append(s - spans[i - 1][1])
        if i + 1 < len(spans):
            gaps.append(spans[i + 1][0] - e)
        if gaps and total > a * (2 * min(gaps) + 1):
            return None
    return [(s, e) for s, e, _ in spans]


def _count_in_range(spans: list, n_cap: int) -> int:
    """Number of integers in the spans with 0 < |n| <= n_cap."""
    total = 0
    for s, e in spans:
        for lo, hi in ((1, n_cap), (-n_cap, -1)):
            a, b = max(s, lo), min(e, hi)
            if a <= b:
                total += b - a + 1
    return total


def density_series(
    signal,
    n_list: Sequence[int],
    C: Fraction = Fraction(2),
    epsilon: Fraction = Fraction(1, 10),
    g=None,
    uncentered: bool = False,
    limits: Limits = DEFAULT_LIMITS,
) -> list:
    """One DensityRow per N in the increasing n_list.

    C > 1 (so membership decays), epsilon in (0, 1/2).  g, when given, must
    expose value_at(N, limits) -> Value for the N/g(N) normalization."""
    C = Fraction(C)
    epsilon = Fraction(epsilon)
    if C <= 1:
        raise ParameterViolation("density series needs C > 1")
    if not 0 < epsilon < Fraction(1, 2):
        raise ParameterViolation("epsilon must lie in (0, 1/2)")
    if not n_list or any(n <= 0 for n in n_list):
        raise ParameterViolation("N values must be positive")
    if any(b >= a for a, b in zip(n_list[1:], n_list)):
        raise ParameterViolation("N values must be strictly increasing")
    if not isinstance(signal, (BlockSignal, DenseSignal)):
        raise ParameterViolation("density series runs on integer signals")
    lo, hi = support_bounds(signal)
    a_rad = max(abs(lo), abs(hi))
    if uncentered:
        horizon = None  # far membership in S straddles 1/C; stay pointwise
    else:
        horizon = max(a_rad, _ceil_frac(a_rad / epsilon), _ceil_frac(a_rad * C / (C - 1)))

    rows: list = []
    cur_s = cur_z = cur_n1 = 0
    evaluated_to = 0
    structural_spans: Optional[list] = None
    structural_probed = False

    def ratio_z(count: int, n_val: int) -> Optional[Value]:
        if g is None:
            return None
        return v_mul_frac(g.value_at(n_val, limits), Fraction(count, n_val), limits.precision)

    for n_val in n_list:
        need = n_val if horizon is None else min(n_val, horizon)
        if need <= limits.density_eval_cap:
            while evaluated_to < need:
                evaluated_to += 1
                for m in (evaluated_to, -evaluated_to):
                    rec = (
                        event_uncentered(signal, m, limits)
                        if uncentered
                        else event_centered(signal, m, limits)
                    )
                    ratio, _ = _ratio_of(rec, uncentered)
                    if ratio <= 1 / C:
                        cur_s += 1
                    if ratio == 0:
                        cur_z += 1
                    if 1 - epsilon <= ratio <= 1 + epsilon:
                        cur_n1 += 1
            tail = n_val - evaluated_to if n_val > evaluated_to else 0
            n1 = cur_n1 + 2 * tail  # beyond the horizon every ratio is near 1
            rows.append(
                DensityRow(
                    n_val,
                    cur_s,
                    cur_z,
                    n1,
                    Fraction(cur_s, n_val),
                    ratio_z(cur_z, n_val),
                    Fraction(n1, 2 * n_val),
                    "",
                )
            )
            continue
        if not uncentered and not structural_probed:
            structural_probed = True
            if isinstance(signal, BlockSignal):
                structural_spans = _structural_zero_blocks(signal)
        if structural_spans is not None and not uncentered:
            z = _count_in_range(structural_spans, n_val)
            rows.append(
                DensityRow(n_val, None, z, None, None, ratio_z(z, n_val), None, "structural")
            )
        else:
            rows.append(DensityRow(n_val, None, None, None, None, None, None, "partial"))
    return rows


_CSV_HEADER = "N,count_S,count_Z,count_near1,ratio_S,ratio_Z_norm,ratio_near1,flags"


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, int):
        return int_str(v)
    if isinstance(v, Fraction):
        return rational_str(v)
    return value_str(v)


def rows_to_csv(rows: Sequence[DensityRow]) -> str:
    lines = [_CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [
                    int_str(r.N),
                    _cell(r.count_S),
                    _cell(r.count_Z),
                    _cell(r.count_near1),
                    _cell(r.ratio_S_over_N),
                    _cell(r.ratio_Z_over_NoverG),
                    _cell(r.ratio_near1_over_2N),
                    r.flags,
                ]
            )
        )
    return "\n".join(lines) + "\n"
