"""Command-line front end: construct signals, profile them, emit density
tables, and run verification suites with machine-readable verdicts.

Exit codes: 0 pass, 1 verification failure, 2 usage or input error,
3 resource cap exceeded.  All mathematically meaningful quantities cross
the boundary as exact "p/q" strings (enclosures as "lo..hi"); outputs are
deterministic for a fixed command line, so a fixed seed gives
byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional

from .analysis import density_series, rows_to_csv
from .constructions import (
    Certificate,
    GrowthSpec,
    build_theorem27,
    build_theorem29_linf,
    build_theorem29_lp,
    dirac,
    verify_delta,
    verify_theorem27,
    verify_theorem29_linf,
    verify_theorem29_lp,
)
from .corpus import diff_signal, random_dense
from .errors import HlmaxError, ResourceCapExceeded
from .maxengine import profile
from .signal import BlockSignal, DenseSignal, signal_from_json, signal_to_json
from .continuum import step_to_json
from .values import int_str, parse_int, parse_rational, rational_str, value_str

_THEOREMS = ("delta", "theorem27", "theorem29-linf", "theorem29-lp")


def _parse_growth(tokens: Optional[list]) -> GrowthSpec:
    if not tokens:
        return GrowthSpec("log")
    kind = tokens[0]
    if kind in ("log", "loglog"):
        if len(tokens) != 1:
            raise ValueError(f"--g {kind} takes no parameter")
        return GrowthSpec(kind)
    if kind in ("logpow", "power"):
        if len(tokens) != 2:
            raise ValueError(f"--g {kind} needs a rational exponent")
        return GrowthSpec(kind, parse_rational(tokens[1]))
    raise ValueError(f"unknown growth kind {kind!r}")


def _parse_points(spec: str) -> list:
    return [parse_int(tok) for tok in spec.split(",") if tok.strip()]


def _parse_range(spec: str) -> list:
    a, sep, b = spec.partition("..")
    if not sep:
        raise ValueError("--range expects A..B")
    lo, hi = parse_int(a), parse_int(b)
    if hi < lo:
        raise ValueError("--range expects A <= B")
    return list(range(lo, hi + 1))


def _add_construction_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--g", nargs="+", metavar="GROWTH",
                     help="growth function: log | loglog | logpow B | power B")
    sub.add_argument("--k", type=int, default=None, help="number of scales k_max")
    sub.add_argument("--mode", choices=("paper", "relaxed"), default="paper")
    sub.add_argument("--p", help="exponent p as p/q (theorem29-lp)")
    sub.add_argument("--alpha", help="decay alpha as p/q (theorem29-lp)")
    sub.add_argument("--n1", type=int, default=None, help="first scale (relaxed mode)")
    sub.add_argument("--growth-factor", type=int, default=None,
                     help="multiplicative scale growth (relaxed mode)")
    sub.add_argument("--variant", choices=("discrete", "continuous"),
                     default="discrete", help="theorem27 signal model")


def _build(args) -> tuple:
    """Shared construct/verify dispatch: returns (signal, certificate)."""
    mode = "paper_exact" if args.mode == "paper" else "relaxed"
    if args.theorem == "delta":
        return dirac(), Certificate("delta", "paper_exact", [], [], [])
    if args.theorem == "theorem27":
        g = _parse_growth(args.g)
        k = args.k if args.k is not None else 4
        return build_theorem27(g, k, mode, args.variant, args.n1, args.growth_factor)
    if args.theorem == "theorem29-linf":
        k = args.k if args.k is not None else 5
        return build_theorem29_linf(
            k, mode, n1=args.n1 or 2, growth_factor=args.growth_factor
        )
    if args.p is None or args.alpha is None:
        raise ValueError("theorem29-lp needs --p and --alpha")
    k = args.k if args.k is not None else 4
    return build_theorem29_lp(
        parse_rational(args.p), parse_rational(args.alpha), k, mode,
        n1=args.n1, growth_factor=args.growth_factor,
    )


def _cmd_construct(args) -> int:
    sig, cert = _build(args)
    doc = step_to_json(sig) if not isinstance(sig, (BlockSignal, DenseSignal)) else signal_to_json(sig)
    with open(args.out, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
    if args.cert:
        with open(args.cert, "w") as fh:
            json.dump(cert.to_json(), fh, indent=2)
            fh.write("\n")
    print(f"wrote {args.out}" + (f" and {args.cert}" if args.cert else ""))
    return 0


def _cmd_profile(args) -> int:
    with open(args.signal) as fh:
        doc = json.load(fh)
    if doc.get("type") == "step":
        raise ValueError("profile runs on integer signals (dense/blocks)")
    sig = signal_from_json(doc)
    if args.range is not None:
        points = _parse_range(args.range)
    elif args.points is not None:
        points = _parse_points(args.points)
    else:
        raise ValueError("profile needs --range or --points")
    results = profile(sig, points, uncentered=args.uncentered)
    radius_col = "min_diameter" if args.uncentered else "radius"
    lines = [f"n,max_value,{radius_col},certified,gap"]
    for res in results:
        rad = res.min_diameter if args.uncentered else res.radius
        gap = rational_str(res.gap) if res.gap is not None else ""
        lines.append(
            f"{int_str(res.n)},{value_str(res.max_value)},{int_str(rad)},"
            f"{str(res.certified).lower()},{gap}"
        )
    with open(args.out, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {args.out} ({len(results)} points)")
    return 0


def _cmd_density(args) -> int:
    with open(args.signal) as fh:
        doc = json.load(fh)
    if doc.get("type") == "step":
        raise ValueError("density runs on integer signals (dense/blocks)")
    sig = signal_from_json(doc)
    g = _parse_growth(args.g) if args.g else None
    rows = density_series(
        sig,
        _parse_points(args.N_list),
        C=parse_rational(args.C),
        epsilon=parse_rational(args.epsilon),
        g=g,
        uncentered=args.uncentered,
    )
    with open(args.out, "w") as fh:
        fh.write(rows_to_csv(rows))
    print(f"wrote {args.out} ({len(rows)} rows)")
    return 0


def _cmd_verify(args) -> int:
    mode = "paper_exact" if args.mode == "paper" else "relaxed"
    if args.theorem == "delta":
        report = verify_delta()
    elif args.theorem == "theorem27":
        k = args.k if args.k is not None else 4
        report = verify_theorem27(
            _parse_growth(args.g), k, mode, args.variant, args.n1, args.growth_factor
        )
    elif args.theorem == "theorem29-linf":
        k = args.k if args.k is not None else 5
        report = verify_theorem29_linf(
            k, mode, n1=args.n1 or 2, growth_factor=args.growth_factor
        )
    else:
        if args.p is None or args.alpha is None:
            raise ValueError("theorem29-lp needs --p and --alpha")
        k = args.k if args.k is not None else 4
        report = verify_theorem29_lp(
            parse_rational(args.p), parse_rational(args.alpha), k, mode,
            n1=args.n1, growth_factor=args.growth_factor,
        )
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    for claim in report["claims"]:
        print(f"{claim['status']:>12}  {claim['name']}  [{claim['basis']}]")
    recheck = report["certificate_recheck"]
    print(f"{'pass' if recheck['ok'] else 'fail':>12}  certificate_recheck")
    if report["resource_capped"]:
        print("verdict: RESOURCE-CAPPED (some claims unverifiable at these scales)")
        return 3
    if not report["ok"]:
        print("verdict: FAIL")
        return 1
    print("verdict: PASS")
    return 0


def _cmd_oracle_diff(args) -> int:
    rng = random.Random(args.seed)
    mismatches: list = []
    for trial in range(args.trials):
        sig = random_dense(rng, max_width=args.max_width,
                           run_limited=trial % 5 != 4)
        for msg in diff_signal(sig):
            mismatches.append(f"trial {trial}: {msg}")
        if mismatches:
            break
    print(
        f"oracle-diff: trials={args.trials} max_width={args.max_width} "
        f"seed={args.seed} mismatches={len(mismatches)}"
    )
    for msg in mismatches:
        print("  " + msg)
    return 0 if not mismatches else 1


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hlmax",
        description="Exact maximal-function and frequency-function toolkit",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("construct", help="generate a counterexample signal")
    sub.add_argument("theorem", choices=_THEOREMS)
    _add_construction_flags(sub)
    sub.add_argument("--out", required=True, help="signal JSON path")
    sub.add_argument("--cert", default=None, help="certificate JSON path")
    sub.set_defaults(func=_cmd_construct)

    sub = subs.add_parser("profile", help="frequency profile at chosen points")
    sub.add_argument("--signal", required=True)
    sub.add_argument("--range", default=None, help="A..B inclusive")
    sub.add_argument("--points", default=None, help="comma-separated integers")
    sub.add_argument("--uncentered", action="store_true")
    sub.add_argument("--out", required=True, help="profile CSV path")
    sub.set_defaults(func=_cmd_profile)

    sub = subs.add_parser("density", help="set-size series over 0 < |n| <= N")
    sub.add_argument("--signal", required=True)
    sub.add_argument("--N-list", required=True, dest="N_list",
                     help="comma-separated increasing N values")
    sub.add_argument("--C", default="2", help="band constant as p/q")
    sub.add_argument("--epsilon", default="1/10", help="window as p/q")
    sub.add_argument("--g", nargs="+", default=None,
                     help="growth for the N/g(N) normalization")
    sub.add_argument("--uncentered", action="store_true")
    sub.add_argument("--out", required=True, help="density CSV path")
    sub.set_defaults(func=_cmd_density)

    sub = subs.add_parser("verify", help="re-derive and check a construction's claims")
    sub.add_argument("theorem", choices=_THEOREMS)
    _add_construction_flags(sub)
    sub.add_argument("--report", default=None, help="report JSON path")
    sub.set_defaults(func=_cmd_verify)

    sub = subs.add_parser("oracle-diff", help="randomized engine-vs-oracle check")
    sub.add_argument("--trials", type=int, default=100)
    sub.add_argument("--max-width", type=int, default=64)
    sub.add_argument("--seed", type=int, default=0)
    sub.set_defaults(func=_cmd_oracle_diff)
    return parser


def _normalize_argv(argv: list) -> list:
    """Join '--range -3..3' / '--points -5,0,5' into '--flag=value' so
    argparse does not mistake a leading minus for an option."""
    out: list = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--range", "--points") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = _make_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_normalize_argv(list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ResourceCapExceeded as exc:
        print(f"error: resource cap: {exc}", file=sys.stderr)
        return 3
    except (HlmaxError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
