"""Exact maximal averages for one-dimensional step functions.

A step function is constant on finitely many bounded intervals with rational
breakpoints and zero outside.  Centered averages over balls (x - r, x + r)
and uncentered averages over intervals containing x are exact rationals, and
between breakpoint-crossing radii the average is a Mobius function of the
radius with no interior extrema, so the maximum and the minimal maximizing
radius are found by evaluating finitely many candidates.

The vanishing-radius convention: as r -> 0 the centered average tends to the
mean of the one-sided limits at x, and a step function realizes that limit
exactly on a whole initial interval of radii, so when nothing beats it the
reported radius is 0 (the infimum of the attaining set) with attained=True.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonpositiveRadius, ParameterViolation, ZeroSignal
from .values import parse_rational, rational_str


@dataclass(frozen=True)
class ContinuousResult:
    """Maximal average at x; radius is the minimal maximizing ball radius
    (centered) or half the minimal maximizing interval length (uncentered),
    0 when the supremum is already realized at vanishing radii."""

    x: Fraction
    max_value: Fraction
    radius: Fraction
    attained: bool


class StepFunction:
    """Breakpoints x_0 < ... < x_m with value v_i on (x_{i-1}, x_i)."""

    __slots__ = ("breakpoints", "values", "_prefix")

    def __init__(self, breakpoints, values):
        bps = [Fraction(b) for b in breakpoints]
        vals = [Fraction(v) for v in values]
        if len(bps) != len(vals) + 1:
            raise ParameterViolation("need one more breakpoint than values")
        if any(b2 <= b1 for b1, b2 in zip(bps, bps[1:])):
            raise ParameterViolation("breakpoints must be strictly increasing")
        if any(v < 0 for v in vals):
            raise ParameterViolation("step values must be non-negative")
        while vals and vals[0] == 0:
            vals.pop(0)
            bps.pop(0)
        while vals and vals[-1] == 0:
            vals.pop()
            bps.pop()
        if not vals:
            raise ZeroSignal("step function is identically zero")
        self.breakpoints = tuple(bps)
        self.values = tuple(vals)
        pref = [Fraction(0)]
        for v, b1, b2 in zip(vals, bps, bps[1:]):
            pref.append(pref[-1] + v * (b2 - b1))
        self._prefix = pref

    def integral(self) -> Fraction:
        """Total mass of the function."""
        return self._prefix[-1]

    def _integral_to(self, t: Fraction) -> Fraction:
        """Mass over (-inf, t]."""
        bps = self.breakpoints
        if t <= bps[0]:
            return Fraction(0)
        if t >= bps[-1]:
            return self._prefix[-1]
        i = bisect_right(bps, t) - 1
        return self._prefix[i] + self.values[i] * (t - bps[i])

    def mass(self, a: Fraction, b: Fraction) -> Fraction:
        """Mass over the interval (a, b)."""
        if b <= a:
            return Fraction(0)
        return self._integral_to(b) - self._integral_to(a)

    def one_sided_limits(self, x: Fraction) -> tuple[Fraction, Fraction]:
        """(f(x-), f(x+)); breakpoints separate the two."""
        bps = self.breakpoints
        x = Fraction(x)
        if x < bps[0] or x > bps[-1]:
            return Fraction(0), Fraction(0)
        i = bisect_left(bps, x)
        if i < len(bps) and bps[i] == x:
            left = self.values[i - 1] if i >= 1 else Fraction(0)
            right = self.values[i] if i < len(self.values) else Fraction(0)
            return left, right
        return self.values[i - 1], self.values[i - 1]

    def __eq__(self, other):
        return (
            isinstance(other, StepFunction)
            and self.breakpoints == other.breakpoints
            and self.values == other.values
        )

    def __repr__(self):
        return f"StepFunction(pieces={len(self.values)}, support={self.breakpoints[0]}..{self.breakpoints[-1]})"


def average_ball(f: StepFunction, x: Fraction, r: Fraction) -> Fraction:
    """Mean of f over the ball (x - r, x + r), r > 0."""
    x, r = Fraction(x), Fraction(r)
    if r <= 0:
        raise NonpositiveRadius("continuous averages need radius > 0")
    return f.mass(x - r, x + r) / (2 * r)


def maximal_centered_cont(f: StepFunction, x: Fraction) -> ContinuousResult:
    """Maximal centered average at x and the infimum of maximizing radii.

    Candidate radii are the distances from x to the breakpoints: between
    them the average is a Mobius function of r (mass is affine in r), hence
    monotone or constant, and constancy propagates the same value to the
    candidate endpoints.  The r -> 0 limit, the mean of the one-sided
    limits, is matched exactly on radii below the nearest candidate."""
    x = Fraction(x)
    left, right = f.one_sided_limits(x)
    best = (left + right) / 2
    best_r = Fraction(0)
    for r in sorted({abs(x - b) for b in f.breakpoints} - {Fraction(0)}):
        a = average_ball(f, x, r)
        if a > best:
            best, best_r = a, r
    return ContinuousResult(x, best, best_r, True)


def maximal_uncentered_cont(f: StepFunction, x: Fraction) -> ContinuousResult:
    """Maximal average over intervals containing x; radius reports half the
    minimal maximizing interval length (0 when vanishing intervals already
    realize the supremum, which for a step function equals the larger
    one-sided limit)."""
    x = Fraction(x)
    left, right = f.one_sided_limits(x)
    best = max(left, right)
    best_diam = Fraction(0)
    l_cands = sorted({b for b in f.breakpoints if b < x} | {x})
    u_cands = sorted({b for b in f.breakpoints if b > x} | {x})
    for l in l_cands:
        for u in u_cands:
            if u <= l:
                continue
            a = f.mass(l, u) / (u - l)
            if a > best:
                best, best_diam = a, u - l
            elif a == best and best_diam != 0 and u - l < best_diam:
                best_diam = u - l
    return ContinuousResult(x, best, best_diam / 2, True)


def grid_scan_centered(
    f: StepFunction, x: Fraction, r_max: Fraction, steps: int
) -> tuple[Fraction, Fraction]:
    """Brute-force grid oracle: the exact maximum of A_r over the radii
    k * (r_max / steps), k = 1..steps.  A lower bound for the true maximum,
    and equal to it whenever some maximizing radius lies on the grid."""
    x, r_max = Fraction(x), Fraction(r_max)
    if steps < 1 or r_max <= 0:
        raise ParameterViolation("grid scan needs steps >= 1 and r_max > 0")
    step = r_max / steps
    best = None
    best_r = None
    for k in range(1, steps + 1):
        r = k * step
        a = average_ball(f, x, r)
        if best is None or a > best:
            best, best_r = a, r
    return best, best_r


def step_to_json(f: StepFunction) -> dict:
    return {
        "type": "step",
        "breakpoints": [rational_str(b) for b in f.breakpoints],
        "values": [rational_str(v) for v in f.values],
    }


def step_from_json(doc: dict) -> StepFunction:
    if doc.get("type") != "step":
        raise ParameterViolation(f"unknown step-function type {doc.get('type')!r}")
    return StepFunction(
        [parse_rational(s) for s in doc["breakpoints"]],
        [parse_rational(s) for s in doc["values"]],
    )
