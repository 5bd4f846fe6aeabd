"""Non-negative signals on the integers.

Two representations:

* DenseSignal: an explicit window of rational values, for brute-force oracles
  and small experiments.
* BlockSignal: sorted, disjoint constant or power-law blocks, for event-driven
  engines at scales where n may have thousands of digits.

Window sums are exact Fractions whenever every overlapped block is constant;
power-law overlaps produce certified enclosures.  All-constant block signals
additionally expose an integer "scaled view" (amplitudes multiplied by their
common denominator) so hot loops can run on machine-free big-int arithmetic
with no Fraction normalization.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import mpmath

from .config import DEFAULT_LIMITS, Limits
from .errors import (
    DenseWidthExceeded,
    ParameterViolation,
    PowerLawRangeTooLarge,
    ZeroSignal,
)
from .values import (
    Enclosure,
    Value,
    fraction_to_enclosure,
    int_str,
    parse_int,
    parse_rational,
    power_term,
    rational_str,
    v_add,
)


@dataclass(frozen=True)
class PowerLaw:
    """Amplitude model f(n) = n^(-alpha) on the block, alpha rational in (0,1)."""

    alpha: Fraction

    def __post_init__(self):
        if not (0 < self.alpha < 1):
            raise ParameterViolation("power-law exponent must lie in (0, 1)")


Amp = Union[Fraction, PowerLaw]


@dataclass(frozen=True)
class Block:
    start: int
    end: int
    amp: Amp

    def __post_init__(self):
        if self.start > self.end:
            raise ParameterViolation("block with start > end")
        if isinstance(self.amp, PowerLaw):
            if self.start < 1:
                raise ParameterViolation("power-law blocks need start >= 1")
        elif isinstance(self.amp, Fraction):
            if self.amp <= 0:
                raise ParameterViolation("constant block amplitude must be > 0")
        else:
            raise ParameterViolation("unknown amplitude model")

    @property
    def length(self) -> int:
        return self.end - self.start + 1


class DenseSignal:
    """Explicit rational values on [lo, lo + len - 1], trimmed and non-zero."""

    __slots__ = ("lo", "values", "_prefix", "_int_view")

    def __init__(self, lo: int, values):
        vals = [Fraction(v) for v in values]
        if any(v < 0 for v in vals):
            raise ParameterViolation("signal values must be non-negative")
        i = 0
        while i < len(vals) and vals[i] == 0:
            i += 1
        j = len(vals)
        while j > i and vals[j - 1] == 0:
            j -= 1
        if i == j:
            raise ZeroSignal("dense signal is identically zero")
        self.lo = lo + i
        self.values = tuple(vals[i:j])
        pref = [Fraction(0)]
        for v in self.values:
            pref.append(pref[-1] + v)
        self._prefix = pref
        self._int_view = None

    def int_view(self) -> tuple:
        """(D, scaled values, scaled prefix) with D the common denominator."""
        if self._int_view is None:
            d = 1
            for v in self.values:
                d = d * v.denominator // math.gcd(d, v.denominator)
            scaled = [v.numerator * (d // v.denominator) for v in self.values]
            pref = [0]
            for s in scaled:
                pref.append(pref[-1] + s)
            self._int_view = (d, scaled, pref)
        return self._int_view

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    def __eq__(self, other):
        return (
            isinstance(other, DenseSignal)
            and self.lo == other.lo
            and self.values == other.values
        )

    def __repr__(self):
        return f"DenseSignal(lo={self.lo}, width={len(self.values)})"


class BlockSignal:
    """Sorted disjoint blocks; adjacent blocks with identical amplitude merge."""

    __slots__ = ("blocks", "_starts", "_ends", "_boundaries", "_int_view", "_pl_tables")

    def __init__(self, blocks):
        blist = sorted(blocks, key=lambda b: b.start)
        if not blist:
            raise ZeroSignal("block signal with no blocks")
        merged = [blist[0]]
        for b in blist[1:]:
            prev = merged[-1]
            if b.start <= prev.end:
                raise ParameterViolation("overlapping blocks")
            if b.start == prev.end + 1 and b.amp == prev.amp:
                merged[-1] = Block(prev.start, b.end, prev.amp)
            else:
                merged.append(b)
        self.blocks = tuple(merged)
        self._starts = [b.start for b in merged]
        self._ends = [b.end for b in merged]
        bset = set()
        for b in merged:
            bset.add(b.start)
            bset.add(b.end)
        self._boundaries = sorted(bset)
        self._int_view = None
        self._pl_tables = {}

    @property
    def has_powerlaw(self) -> bool:
        return any(isinstance(b.amp, PowerLaw) for b in self.blocks)

    def boundaries(self) -> list:
        return self._boundaries

    def int_view(self) -> Optional[tuple]:
        """(D, amps_scaled, prefix_mass) for all-constant signals, else None.

        amps_scaled[i] = amp_i * D as an int; prefix_mass[i] = scaled mass of
        blocks[:i].  Lets engines form window numerators as plain integers."""
        if self._int_view is None:
            if self.has_powerlaw:
                self._int_view = (None,)
            else:
                d = 1
                for b in self.blocks:
                    d = d * b.amp.denominator // math.gcd(d, b.amp.denominator)
                amps = [b.amp.numerator * (d // b.amp.denominator) for b in self.blocks]
                pref = [0]
                for b, a in zip(self.blocks, amps):
                    pref.append(pref[-1] + a * b.length)
                self._int_view = (d, amps, pref)
        return None if self._int_view == (None,) else self._int_view

    def __eq__(self, other):
        return isinstance(other, BlockSignal) and self.blocks == other.blocks

    def __repr__(self):
        return f"BlockSignal(blocks={len(self.blocks)}, support={self.blocks[0].start}..{self.blocks[-1].end})"


Signal = Union[DenseSignal, BlockSignal]


def support_bounds(sig: Signal) -> tuple[int, int]:
    """Smallest and largest n with f(n) != 0."""
    if isinstance(sig, DenseSignal):
        return sig.lo, sig.hi
    return sig.blocks[0].start, sig.blocks[-1].end


def eval_at(sig: Signal, n: int, limits: Limits = DEFAULT_LIMITS) -> Value:
    """Pointwise value f(n); exact except at power-law points with
    irrational values."""
    if isinstance(sig, DenseSignal):
        if sig.lo <= n <= sig.hi:
            return sig.values[n - sig.lo]
        return Fraction(0)
    i = bisect_right(sig._starts, n) - 1
    if i >= 0 and sig._ends[i] >= n:
        amp = sig.blocks[i].amp
        if isinstance(amp, PowerLaw):
            return power_term(n, amp.alpha, limits.precision)
        return amp
    return Fraction(0)


def region_at(sig: BlockSignal, n: int):
    """Amplitude model governing position n: a Fraction (0 in gaps) or PowerLaw."""
    i = bisect_right(sig._starts, n) - 1
    if i >= 0 and sig._ends[i] >= n:
        return sig.blocks[i].amp
    return Fraction(0)


def _pl_table(sig: BlockSignal, idx: int, prec: int):
    """Cumulative directed-rounding prefix sums of a power-law block."""
    key = (idx, prec)
    tab = sig._pl_tables.get(key)
    if tab is None:
        b = sig.blocks[idx]
        los, his = [], []
        lo_acc = hi_acc = mpmath.mpf(0)
        alpha = b.amp.alpha
        for n in range(b.start, b.end + 1):
            t = power_term(n, alpha, prec)
            if isinstance(t, Fraction):
                t = fraction_to_enclosure(t, prec)
            lo_acc = mpmath.fadd(lo_acc, t.lo, prec=prec, rounding="f")
            hi_acc = mpmath.fadd(hi_acc, t.hi, prec=prec, rounding="c")
            los.append(lo_acc)
            his.append(hi_acc)
        tab = (los, his)
        sig._pl_tables[key] = tab
    return tab


def _pl_range_sum(sig: BlockSignal, idx: int, a: int, b: int, limits: Limits) -> Value:
    """Sum of n^(-alpha) over [a, b] inside power-law block idx."""
    blk = sig.blocks[idx]
    prec = limits.precision
    count = b - a + 1
    if count > limits.powerlaw_sum_cap:
        raise PowerLawRangeTooLarge(
            f"power-law intersection of length {int_str(count)} "
            f"exceeds cap {limits.powerlaw_sum_cap}"
        )
    if blk.length <= limits.prefix_cache_cap:
        los, his = _pl_table(sig, idx, prec)
        ib = b - blk.start
        if a == blk.start:
            return Enclosure(los[ib], his[ib])
        ia = a - blk.start
        return Enclosure(
            mpmath.fsub(los[ib], his[ia - 1], prec=prec, rounding="f"),
            mpmath.fsub(his[ib], los[ia - 1], prec=prec, rounding="c"),
        )
    lo_acc = hi_acc = mpmath.mpf(0)
    alpha = blk.amp.alpha
    for n in range(a, b + 1):
        t = power_term(n, alpha, prec)
        if isinstance(t, Fraction):
            t = fraction_to_enclosure(t, prec)
        lo_acc = mpmath.fadd(lo_acc, t.lo, prec=prec, rounding="f")
        hi_acc = mpmath.fadd(hi_acc, t.hi, prec=prec, rounding="c")
    return Enclosure(lo_acc, hi_acc)


def window_sum(sig: Signal, a: int, b: int, limits: Limits = DEFAULT_LIMITS) -> Value:
    """Sum of f over the integer window [a, b] (empty if a > b)."""
    if a > b:
        return Fraction(0)
    if isinstance(sig, DenseSignal):
        lo_i = max(a, sig.lo) - sig.lo
        hi_i = min(b, sig.hi) - sig.lo + 1
        if lo_i >= hi_i:
            return Fraction(0)
        return sig._prefix[hi_i] - sig._prefix[lo_i]
    view = sig.int_view()
    if view is not None:
        d, _, _ = view
        num = window_sum_scaled(sig, a, b)
        return Fraction(num, d)
    exact = Fraction(0)
    enc: Optional[Value] = None
    i0 = bisect_left(sig._ends, a)
    i1 = bisect_right(sig._starts, b) - 1
    for i in range(i0, i1 + 1):
        blk = sig.blocks[i]
        lo_n = max(a, blk.start)
        hi_n = min(b, blk.end)
        if lo_n > hi_n:
            continue
        if isinstance(blk.amp, PowerLaw):
            part = _pl_range_sum(sig, i, lo_n, hi_n, limits)
            enc = part if enc is None else v_add(enc, part, limits.precision)
        else:
            exact += blk.amp * (hi_n - lo_n + 1)
    if enc is None:
        return exact
    if exact:
        return v_add(enc, exact, limits.precision)
    return enc


def window_sum_scaled(sig: BlockSignal, a: int, b: int) -> int:
    """Integer window numerator for all-constant block signals (amp * D)."""
    d, amps, pref = sig.int_view()
    if a > b:
        return 0
    i0 = bisect_left(sig._ends, a)
    i1 = bisect_right(sig._starts, b) - 1
    if i0 > i1:
        return 0
    total = pref[i1 + 1] - pref[i0]
    first = sig.blocks[i0]
    if a > first.start:
        total -= amps[i0] * (a - first.start)
    last = sig.blocks[i1]
    if b < last.end:
        total -= amps[i1] * (last.end - b)
    return total


def norm_l1(sig: Signal, limits: Limits = DEFAULT_LIMITS) -> Value:
    """Total mass sum_n f(n); positive by the no-zero-signal invariant."""
    lo, hi = support_bounds(sig)
    return window_sum(sig, lo, hi, limits)


def to_blocks(sig: DenseSignal) -> BlockSignal:
    """Maximal constant runs of a dense signal as constant blocks."""
    blocks = []
    run_start = None
    run_val = None
    for off, v in enumerate(sig.values):
        n = sig.lo + off
        if v != run_val:
            if run_val:
                blocks.append(Block(run_start, n - 1, run_val))
            run_start, run_val = n, v
    if run_val:
        blocks.append(Block(run_start, sig.hi, run_val))
    return BlockSignal(blocks)


def to_dense(sig: BlockSignal, limits: Limits = DEFAULT_LIMITS) -> DenseSignal:
    """Materialize a block signal; refuses power-law blocks (irrational values)
    and widths above the cap."""
    if sig.has_powerlaw:
        raise ParameterViolation("power-law blocks have no exact dense form")
    lo, hi = support_bounds(sig)
    width = hi - lo + 1
    if width > limits.dense_width_cap:
        raise DenseWidthExceeded(f"dense width {width} exceeds cap {limits.dense_width_cap}")
    vals = [Fraction(0)] * width
    for b in sig.blocks:
        for n in range(b.start, b.end + 1):
            vals[n - lo] = b.amp
    return DenseSignal(lo, vals)


def translate(sig: Signal, m: int) -> Signal:
    """Shift f by m: (translate f)(n) = f(n - m)."""
    if isinstance(sig, DenseSignal):
        return DenseSignal(sig.lo + m, sig.values)
    if sig.has_powerlaw:
        raise ParameterViolation("power-law values are tied to their coordinates")
    return BlockSignal([Block(b.start + m, b.end + m, b.amp) for b in sig.blocks])


def reflect(sig: Signal) -> Signal:
    """Mirror f: (reflect f)(n) = f(-n)."""
    if isinstance(sig, DenseSignal):
        return DenseSignal(-sig.hi, tuple(reversed(sig.values)))
    if sig.has_powerlaw:
        raise ParameterViolation("power-law values are tied to their coordinates")
    return BlockSignal([Block(-b.end, -b.start, b.amp) for b in sig.blocks])


def scale(sig: Signal, c: Fraction) -> Signal:
    """Scale amplitudes by a rational c > 0."""
    c = Fraction(c)
    if c <= 0:
        raise ParameterViolation("scale factor must be positive")
    if isinstance(sig, DenseSignal):
        return DenseSignal(sig.lo, [v * c for v in sig.values])
    if sig.has_powerlaw:
        raise ParameterViolation("power-law amplitudes carry no scale factor")
    return BlockSignal([Block(b.start, b.end, b.amp * c) for b in sig.blocks])


def signal_to_json(sig: Signal) -> dict:
    # integers are serialized as decimal strings: block boundaries reach
    # scales where the interpreter refuses direct int<->str conversion
    if isinstance(sig, DenseSignal):
        return {
            "type": "dense",
            "lo": int_str(sig.lo),
            "values": [rational_str(v) for v in sig.values],
        }
    out = []
    for b in sig.blocks:
        if isinstance(b.amp, PowerLaw):
            amp = {"powerlaw": rational_str(b.amp.alpha)}
        else:
            amp = {"const": rational_str(b.amp)}
        out.append({"start": int_str(b.start), "end": int_str(b.end), "amp": amp})
    return {"type": "blocks", "blocks": out}


def _json_int(v) -> int:
    return v if isinstance(v, int) else parse_int(v)


def signal_from_json(doc: dict) -> Signal:
    kind = doc.get("type")
    if kind == "dense":
        return DenseSignal(_json_int(doc["lo"]), [parse_rational(s) for s in doc["values"]])
    if kind == "blocks":
        blocks = []
        for item in doc["blocks"]:
            amp_doc = item["amp"]
            if "const" in amp_doc:
                amp: Amp = parse_rational(amp_doc["const"])
            elif "powerlaw" in amp_doc:
                amp = PowerLaw(parse_rational(amp_doc["powerlaw"]))
            else:
                raise ParameterViolation("unknown amplitude model in JSON")
            blocks.append(Block(_json_int(item["start"]), _json_int(item["end"]), amp))
        return BlockSignal(blocks)
    raise ParameterViolation(f"unknown signal type {kind!r}")
