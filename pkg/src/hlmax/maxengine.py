"""Exact maximal averages and minimal maximizing radii on the integers.

Centered averages A_r f(n) (the mean of f over [n - r, n + r]) and uncentered
averages over windows [n - rho, n + s] containing n.  The event engines
evaluate only radii at which a window edge crosses a block boundary: between
consecutive events the average is a monotone Mobius function of the radius
when the moving edges sit in constant regions, so skipped radii host neither
a new maximum nor a smaller maximizing radius.  Edges moving through
power-law regions can create one interior peak per stretch; the peak is
pinned down by monotone binary searches justified by the convexity of the
edge terms.  Exhaustive brute-force oracles recompute everything by direct
scan for cross-validation.

All-constant signals run entirely in integer arithmetic (scaled by the
common denominator); power-law signals produce certified enclosures, and any
comparison the enclosures cannot decide is surfaced as certified=False with
the overlap width in `gap`, never silently resolved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .config import DEFAULT_LIMITS, Limits
from .errors import BudgetExceeded, NonpositiveRadius
from .signal import (
    BlockSignal,
    DenseSignal,
    PowerLaw,
    Signal,
    eval_at,
    region_at,
    support_bounds,
    to_blocks,
    window_sum,
    window_sum_scaled,
)
from .values import (
    Ordering,
    Value,
    compare,
    exact_bounds,
    overlap_width,
    v_add,
    v_div_posint,
    v_mul_int,
    v_sub,
)


@dataclass(frozen=True)
class CenteredResult:
    """Maximal centered average at n and the minimal radius attaining it.

    certified is False when enclosure comparisons could not separate two
    candidate averages; `gap` then bounds how far max_value may sit below
    the true maximum (None when unquantified)."""

    n: int
    max_value: Value
    radius: int
    certified: bool
    gap: Optional[Fraction] = None


@dataclass(frozen=True)
class UncenteredResult:
    """Maximal uncentered average at n and the minimal window diameter
    (length minus one) among maximizing windows; the half-diameter plays
    the role the radius plays in the centered case."""

    n: int
    max_value: Value
    min_diameter: int
    certified: bool
    gap: Optional[Fraction] = None


MaxResult = Union[CenteredResult, UncenteredResult]

_ESCALATIONS = (1, 2, 4)
_ENUM_STRETCH = 64
_ENUM_FALLBACK = 10_000


def average_centered(sig: Signal, n: int, r: int, limits: Limits = DEFAULT_LIMITS) -> Value:
    """A_r f(n): mean of f over the window [n - r, n + r], r >= 0."""
    if r < 0:
        raise NonpositiveRadius("centered averages need radius >= 0")
    total = window_sum(sig, n - r, n + r, limits)
    if isinstance(total, Fraction):
        return total / (2 * r + 1)
    return v_div_posint(total, 2 * r + 1, limits.precision)


def average_uncentered(
    sig: Signal, n: int, rho: int, s: int, limits: Limits = DEFAULT_LIMITS
) -> Value:
    """Mean of f over the window [n - rho, n + s] containing n."""
    if rho < 0 or s < 0:
        raise NonpositiveRadius("uncentered averages need rho, s >= 0")
    total = window_sum(sig, n - rho, n + s, limits)
    length = rho + s + 1
    if isinstance(total, Fraction):
        return total / length
    return v_div_posint(total, length, limits.precision)


def search_bound_centered(sig: Signal, n: int) -> int:
    """Radius beyond which the centered average is strictly decreasing.

    At R = max(|n - lo|, |n - hi|) the window swallows the support, so for
    r >= R the numerator is frozen at the total mass while the denominator
    grows: no maximum and no smaller maximizing radius lives past R."""
    lo, hi = support_bounds(sig)
    return max(abs(n - lo), abs(n - hi))


def _sign(v: Value) -> Optional[int]:
    """Certified sign of a Value: +1, -1, 0 (exact), or None (undecided)."""
    lo, hi = exact_bounds(v)
    if lo > 0:
        return 1
    if hi < 0:
        return -1
    if lo == hi:
        return 0
    return None


def _as_blocks(sig: Signal) -> BlockSignal:
    return sig if isinstance(sig, BlockSignal) else to_blocks(sig)


class _PeakState:
    """Collects soundness bookkeeping from interior-peak searches."""

    __slots__ = ("uncertified",)

    def __init__(self):
        self.uncertified = False


def _delta_step_sign(sig: BlockSignal, n: int, r: int, limits: Limits, state: _PeakState) -> int:
    """Sign of delta(r+1) - delta(r), delta(r) = f(n-r-1) + f(n+r+1)."""
    for mult in _ESCALATIONS:
        lim = limits if mult == 1 else limits.with_(precision=limits.precision * mult)
        p = lim.precision
        d1 = v_add(eval_at(sig, n - r - 2, lim), eval_at(sig, n + r + 2, lim), p)
        d0 = v_add(eval_at(sig, n - r - 1, lim), eval_at(sig, n + r + 1, lim), p)
        s = _sign(v_sub(d1, d0, p))
        if s is not None:
            return s
    state.uncertified = True
    return -1


def _h_sign(sig: BlockSignal, n: int, r: int, limits: Limits, state: _PeakState) -> int:
    """Sign of h(r) = (2r+1) delta(r) - 2 N(r); h > 0 iff A_{r+1} > A_r."""
    for mult in _ESCALATIONS:
        lim = limits if mult == 1 else limits.with_(precision=limits.precision * mult)
        p = lim.precision
        delta = v_add(eval_at(sig, n - r - 1, lim), eval_at(sig, n + r + 1, lim), p)
        nsum = window_sum(sig, n - r, n + r, lim)
        s = _sign(v_sub(v_mul_int(delta, 2 * r + 1, p), v_mul_int(nsum, 2, p), p))
        if s is not None:
            return s
    state.uncertified = True
    return 1


def _centered_stretch_peaks(
    sig: BlockSignal, n: int, r1: int, r2: int, limits: Limits, out: set, state: _PeakState
) -> None:
    """Add interior peak radii of A over the event-free stretch (r1, r2).

    Both moving edges stay inside single amplitude regions for r in
    [r1, r2 - 1] (a boundary crossing inside the stretch would itself be an
    event radius, contradicting consecutiveness).  Constant regions make the
    average a monotone Mobius function: nothing interior to add.  A power-law
    region makes delta(r) = f(n-r-1) + f(n+r+1) convex, so the increment sign
    h(r) = (2r+1) delta(r) - 2 N(r) is valley-shaped and crosses from + to -
    at most once; the crossing is found by two monotone binary searches."""
    left_amp = region_at(sig, n - r1 - 1)
    right_amp = region_at(sig, n + r1 + 1)
    if not isinstance(left_amp, PowerLaw) and not isinstance(right_amp, PowerLaw):
        return
    if r2 - r1 <= _ENUM_STRETCH:
        out.update(range(r1 + 1, r2))
        return
    sub = _PeakState()
    # valley bottom of h: first r in [r1, r2-2] whose delta-step is >= 0
    lo_r, hi_r = r1, r2 - 2
    if _delta_step_sign(sig, n, lo_r, limits, sub) >= 0:
        m = lo_r
    elif _delta_step_sign(sig, n, hi_r, limits, sub) < 0:
        m = r2 - 1
    else:
        while hi_r - lo_r > 1:
            mid = (lo_r + hi_r) // 2
            if _delta_step_sign(sig, n, mid, limits, sub) >= 0:
                hi_r = mid
            else:
                lo_r = mid
        m = hi_r
    # h is non-increasing on [r1, m]; find its first non-positive point
    if _h_sign(sig, n, r1, limits, sub) <= 0:
        out.add(r1 + 1)
        t = r1
    elif _h_sign(sig, n, m, limits, sub) > 0:
        t = None
    else:
        lo_h, hi_h = r1, m
        while hi_h - lo_h > 1:
            mid = (lo_h + hi_h) // 2
            if _h_sign(sig, n, mid, limits, sub) <= 0:
                hi_h = mid
            else:
                lo_h = mid
        t = hi_h
    if t is not None:
        for r in range(t - 2, t + 3):
            if r1 < r < r2:
                out.add(r)
    if sub.uncertified:
        # sign calls stayed undecided at max precision: enumerate when the
        # stretch is small enough, otherwise surface the uncertainty
        if r2 - r1 <= _ENUM_FALLBACK:
            out.update(range(r1 + 1, r2))
        else:
            state.uncertified = True


def _candidate_radii(sig: BlockSignal, n: int, r_cap: int, limits: Limits, state: _PeakState) -> list:
    """Event radii (edge meets boundary, +-1) plus interior power-law peaks."""
    cand = {0, r_cap}
    for b in sig.boundaries():
        base = abs(n - b)
        for d in (-1, 0, 1):
            r = base + d
            if 0 <= r <= r_cap:
                cand.add(r)
    if sig.has_powerlaw:
        ordered = sorted(cand)
        extra: set = set()
        for r1, r2 in zip(ordered, ordered[1:]):
            if r2 - r1 >= 2:
                _centered_stretch_peaks(sig, n, r1, r2, limits, extra, state)
        cand |= extra
    return sorted(cand)


def event_centered(sig: Signal, n: int, limits: Limits = DEFAULT_LIMITS) -> CenteredResult:
    """Maximal centered average and minimal maximizing radius at n.

    Only event radii are evaluated; Mobius monotonicity between events (and
    the peak searches inside power-law stretches) make the candidate set
    complete both for the maximum and for the minimal radius attaining it."""
    blocks = _as_blocks(sig)
    r_cap = search_bound_centered(blocks, n)
    state = _PeakState()
    cands = _candidate_radii(blocks, n, r_cap, limits, state)
    view = blocks.int_view()
    if view is not None:
        d, _, _ = view
        best_num, best_den, best_r = -1, 1, 0
        for r in cands:
            num = window_sum_scaled(blocks, n - r, n + r)
            den = 2 * r + 1
            if num * best_den > best_num * den:
                best_num, best_den, best_r = num, den, r
        return CenteredResult(n, Fraction(best_num, d * best_den), best_r, True)
    best_v: Optional[Value] = None
    best_r = 0
    certified = not state.uncertified
    gap = Fraction(0)
    for r in cands:
        v = average_centered(blocks, n, r, limits)
        if best_v is None:
            best_v, best_r = v, r
            continue
        c = compare(v, best_v)
        if c is Ordering.GREATER:
            best_v, best_r = v, r
        elif c is Ordering.INDETERMINATE:
            certified = False
            gap = max(gap, overlap_width(v, best_v))
    return CenteredResult(n, best_v, best_r, certified, gap if not certified else None)


def oracle_centered(sig: Signal, n: int, limits: Limits = DEFAULT_LIMITS) -> CenteredResult:
    """Brute-force maximal centered average: scan every radius up to the
    search bound, maintaining the window sum incrementally."""
    r_cap = search_bound_centered(sig, n)
    if r_cap > limits.scan_radius_cap:
        raise BudgetExceeded(
            f"oracle scan over {r_cap} radii exceeds cap {limits.scan_radius_cap}"
        )
    if isinstance(sig, DenseSignal):
        d, scaled, _ = sig.int_view()
        lo = sig.lo
        width = len(scaled)

        def fs(pos: int) -> int:
            off = pos - lo
            return scaled[off] if 0 <= off < width else 0

    else:
        view = sig.int_view()
        if view is not None:
            d, _, _ = view

            def fs(pos: int) -> int:
                return window_sum_scaled(sig, pos, pos)

        else:
            d = None
    if d is not None:
        num = fs(n)
        best_num, best_den, best_r = num, 1, 0
        for r in range(1, r_cap + 1):
            num += fs(n - r) + fs(n + r)
            den = 2 * r + 1
            if num * best_den > best_num * den:
                best_num, best_den, best_r = num, den, r
        return CenteredResult(n, Fraction(best_num, d * best_den), best_r, True)
    best_v = average_centered(sig, n, 0, limits)
    best_r = 0
    certified = True
    gap = Fraction(0)
    for r in range(1, r_cap + 1):
        v = average_centered(sig, n, r, limits)
        c = compare(v, best_v)
        if c is Ordering.GREATER:
            best_v, best_r = v, r
        elif c is Ordering.INDETERMINATE:
            certified = False
            gap = max(gap, overlap_width(v, best_v))
    return CenteredResult(n, best_v, best_r, certified, gap if not certified else None)


def _uncentered_bounds(sig: Signal, n: int) -> tuple[int, int]:
    """Largest useful left and right reaches: windows sticking out past the
    support carry the same mass over a longer stretch, hence a strictly
    smaller average, so maximizers never extend past [lo, hi] (except to
    reach an n outside the support, where the near edge is pinned at n)."""
    lo, hi = support_bounds(sig)
    return max(0, n - lo), max(0, hi - n)


def _u_peak(
    sig: BlockSignal,
    l: int,
    u1: int,
    u2: int,
    limits: Limits,
    state: _PeakState,
) -> Optional[int]:
    """Interior peak of u -> mean(f over [l, u]) on a power-law u-stretch.

    Extending the window right adds f(u+1), non-increasing across the
    stretch; once f(u+1) <= A([l, u]) the average can only fall, and the
    predicate stays true afterwards, so its first success is the peak."""

    def pred(u: int) -> int:
        sub = _PeakState()
        for mult in _ESCALATIONS:
            lim = limits if mult == 1 else limits.with_(precision=limits.precision * mult)
            p = lim.precision
            total = window_sum(sig, l, u, lim)
            edge = v_mul_int(eval_at(sig, u + 1, lim), u - l + 1, p)
            s = _sign(v_sub(edge, total, p))
            if s is not None:
                return 1 if s > 0 else 0  # 1: still rising
        state.uncertified = True
        return 0

    if not pred(u1):
        return u1
    if pred(u2 - 1):
        return None
    lo_u, hi_u = u1, u2 - 1
    while hi_u - lo_u > 1:
        mid = (lo_u + hi_u) // 2
        if pred(mid):
            lo_u = mid
        else:
            hi_u = mid
    return hi_u


def event_uncentered(sig: Signal, n: int, limits: Limits = DEFAULT_LIMITS) -> UncenteredResult:
    """Maximal uncentered average at n and the minimal maximizing diameter.

    Candidate window edges are the block boundaries (+-1) and the pinned
    edges n and the support ends.  For fixed right edge the average is
    valley-shaped in the left edge (constant regions: monotone Mobius;
    power-law regions: leftward extension meets non-decreasing values), so
    left edges only matter at stretch endpoints; for fixed left edge the
    average is unimodal in the right edge across power-law stretches, with
    the single interior peak located by a monotone binary search."""
    blocks = _as_blocks(sig)
    rho_max, s_max = _uncentered_bounds(blocks, n)
    l_low, u_high = n - rho_max, n + s_max
    l_set = {n, l_low}
    u_set = {n, u_high}
    for b in blocks.boundaries():
        for d in (-1, 0, 1):
            p = b + d
            if l_low <= p <= n:
                l_set.add(p)
            if n <= p <= u_high:
                u_set.add(p)
    l_cands = sorted(l_set)
    u_cands = sorted(u_set)
    view = blocks.int_view()
    if view is not None:
        d, _, _ = view
        best_num, best_len, best_diam = -1, 1, 0
        for l in l_cands:
            for u in u_cands:
                num = window_sum_scaled(blocks, l, u)
                length = u - l + 1
                lhs = num * best_len
                rhs = best_num * length
                if lhs > rhs or (lhs == rhs and u - l < best_diam):
                    best_num, best_len, best_diam = num, length, u - l
        return UncenteredResult(n, Fraction(best_num, d * best_len), best_diam, True)
    state = _PeakState()
    pl_stretches = []
    if blocks.has_powerlaw:
        for u1, u2 in zip(u_cands, u_cands[1:]):
            if u2 - u1 >= 2 and isinstance(region_at(blocks, u1 + 1), PowerLaw):
                pl_stretches.append((u1, u2))
    best_v: Optional[Value] = None
    best_diam = 0
    certified = True
    gap = Fraction(0)
    for l in l_cands:
        u_all = list(u_cands)
        for u1, u2 in pl_stretches:
            if u2 - u1 <= _ENUM_STRETCH:
                u_all.extend(range(u1 + 1, u2))
            else:
                peak = _u_peak(blocks, l, u1, u2, limits, state)
                if peak is not None:
                    for u in (peak - 1, peak, peak + 1):
                        if u1 < u < u2:
                            u_all.append(u)
        for u in sorted(set(u_all)):
            v = average_uncentered(blocks, n, n - l, u - n, limits)
            if best_v is None:
                best_v, best_diam = v, u - l
                continue
            c = compare(v, best_v)
            if c is Ordering.GREATER:
                best_v, best_diam = v, u - l
            elif c is Ordering.EQUAL:
                if u - l < best_diam:
                    best_diam = u - l
            elif c is Ordering.INDETERMINATE:
                certified = False
                gap = max(gap, overlap_width(v, best_v))
    if state.uncertified:
        certified = False
    return UncenteredResult(n, best_v, best_diam, certified, gap if not certified else None)


def oracle_uncentered(sig: Signal, n: int, limits: Limits = DEFAULT_LIMITS) -> UncenteredResult:
    """Brute-force maximal uncentered average: try every window
    [n - rho, n + s] within the useful reaches."""
    rho_max, s_max = _uncentered_bounds(sig, n)
    if (rho_max + 1) * (s_max + 1) > limits.scan_radius_cap * 16:
        raise BudgetExceeded("uncentered oracle grid exceeds scan cap")
    if isinstance(sig, DenseSignal):
        d, _, pref = sig.int_view()
        lo, width = sig.lo, len(sig.values)
    else:
        view = sig.int_view()
        if view is None:
            d = None
        else:
            d, _, pref = view
            lo, hi = support_bounds(sig)
            width = hi - lo + 1
            pref = [window_sum_scaled(sig, lo, lo + k - 1) for k in range(width + 1)]
    if d is not None:
        def mass(a: int, b: int) -> int:
            ia = min(max(a - lo, 0), width)
            ib = min(max(b - lo + 1, 0), width)
            return pref[ib] - pref[ia] if ib > ia else 0

        best_num, best_len, best_diam = -1, 1, 0
        for rho in range(rho_max + 1):
            for s in range(s_max + 1):
                num = mass(n - rho, n + s)
                length = rho + s + 1
                lhs = num * best_len
                rhs = best_num * length
                if lhs > rhs or (lhs == rhs and rho + s < best_diam):
                    best_num, best_len, best_diam = num, length, rho + s
        return UncenteredResult(n, Fraction(best_num, d * best_len), best_diam, True)
    best_v: Optional[Value] = None
    best_diam = 0
    certified = True
    gap = Fraction(0)
    for rho in range(rho_max + 1):
        for s in range(s_max + 1):
            v = average_uncentered(sig, n, rho, s, limits)
            if best_v is None:
                best_v, best_diam = v, rho + s
                continue
            c = compare(v, best_v)
            if c is Ordering.GREATER:
                best_v, best_diam = v, rho + s
            elif c is Ordering.EQUAL:
                if rho + s < best_diam:
                    best_diam = rho + s
            elif c is Ordering.INDETERMINATE:
                certified = False
                gap = max(gap, overlap_width(v, best_v))
    return UncenteredResult(n, best_v, best_diam, certified, gap if not certified else None)


def oracle_uncentered_range(
    sig: Signal, n_lo: int, n_hi: int, limits: Limits = DEFAULT_LIMITS
) -> list:
    """Brute-force uncentered results for every n in [n_lo, n_hi] at once.

    Enumerates all windows with both endpoints inside the support (for inner
    points the trimming argument pins maximizers there) and, for points
    outside the support, all windows pinned at n on the near side.  An
    independent check of the per-point oracle at corpus scale."""
    lo, hi = support_bounds(sig)
    if isinstance(sig, DenseSignal):
        d, _, pref = sig.int_view()
    else:
        view = sig.int_view()
        if view is None:
            return [oracle_uncentered(sig, n, limits) for n in range(n_lo, n_hi + 1)]
        d = view[0]
        width_sup = hi - lo + 1
        pref = [window_sum_scaled(sig, lo, lo + k - 1) for k in range(width_sup + 1)]
    count = n_hi - n_lo + 1
    best_num = [-1] * count
    best_len = [1] * count
    best_diam = [0] * count
    width = hi - lo + 1
    for l in range(lo, hi + 1):
        pl = pref[l - lo]
        n_start = max(l, n_lo)
        for u in range(l, hi + 1):
            num = pref[u - lo + 1] - pl
            if num == 0:
                continue
            length = u - l + 1
            diam = u - l
            for n in range(n_start, min(u, n_hi) + 1):
                i = n - n_lo
                lhs = num * best_len[i]
                rhs = best_num[i] * length
                if lhs > rhs or (lhs == rhs and diam < best_diam[i]):
                    best_num[i], best_len[i], best_diam[i] = num, length, diam
    total = pref[width]
    for n in range(n_lo, min(lo - 1, n_hi) + 1):
        i = n - n_lo
        for u in range(lo, hi + 1):
            num = pref[u - lo + 1]
            length = u - n + 1
            lhs = num * best_len[i]
            rhs = best_num[i] * length
            if lhs > rhs or (lhs == rhs and u - n < best_diam[i]):
                best_num[i], best_len[i], best_diam[i] = num, length, u - n
    for n in range(max(hi + 1, n_lo), n_hi + 1):
        i = n - n_lo
        for l in range(lo, hi + 1):
            num = total - pref[l - lo]
            length = n - l + 1
            lhs = num * best_len[i]
            rhs = best_num[i] * length
            if lhs > rhs or (lhs == rhs and n - l < best_diam[i]):
                best_num[i], best_len[i], best_diam[i] = num, length, n - l
    return [
        UncenteredResult(
            n_lo + i, Fraction(best_num[i], d * best_len[i]), best_diam[i], True
        )
        for i in range(count)
    ]


def profile(
    sig: Signal,
    points,
    uncentered: bool = False,
    limits: Limits = DEFAULT_LIMITS,
) -> list:
    """Event-engine results at each requested point."""
    pts = list(points)
    if len(pts) > limits.profile_point_cap:
        raise BudgetExceeded(
            f"profile over {len(pts)} points exceeds cap {limits.profile_point_cap}"
        )
    blocks = _as_blocks(sig)
    if uncentered:
        return [event_uncentered(blocks, n, limits) for n in pts]
    return [event_centered(blocks, n, limits) for n in pts]
