"""Command-line front end: ``msr solve | oracle | bench``.

Exit codes: 0 success, 2 unreadable input, 3 unsupported dimension,
4 instance too large for the exhaustive oracle.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

import numpy as np

from . import bench
from .errors import DimensionMismatchError, SizeGuardError, UnsupportedDimensionError
from .fileformat import ParseError, dumps, format_text, read_points, result_document
from .geometry import DEFAULT_SEED, as_points
from .msr2 import solve_msr1, solve_msr2
from .msr3 import solve_msr3
from .oracle import brute_msr, check_disjoint_optimum, check_separator_lemma
from .svg import render_svg

EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_SIZE_GUARD = 4

SOLVERS = {1: ("msr1-meb", solve_msr1), 2: ("msr2-sweep", solve_msr2), 3: ("msr3-sweep", solve_msr3)}


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def parse_sizes(text: str) -> list[int]:
    """Parse ``"250,500"``, ``"10^5,10^6"`` or ``"2^14..2^20"`` into sizes."""
    sizes: list[int] = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        m = re.fullmatch(r"(\d+)\^(\d+)\.\.(\d+)\^(\d+)", item)
        if m:
            base, lo, base2, hi = map(int, m.groups())
            if base != base2:
                raise argparse.ArgumentTypeError(f"mismatched bases in {item!r}")
            sizes += [base**e for e in range(lo, hi + 1)]
            continue
        m = re.fullmatch(r"(\d+)\^(\d+)", item)
        if m:
            sizes.append(int(m.group(1)) ** int(m.group(2)))
            continue
        try:
            sizes.append(int(float(item)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad size {item!r}") from None
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive")
    return sizes


def _load(path: str) -> np.ndarray:
    pts = read_points(path)
    return as_points(pts) if len(pts) else pts


def _emit(doc: dict, fmt: str, extra: str = "") -> None:
    text = dumps(doc) if fmt == "json" else format_text(doc) + extra
    sys.stdout.write(text + "\n")


def cmd_solve(args) -> int:
    pts = _load(args.input)
    dim = pts.shape[1]
    name, solver = SOLVERS[args.k]
    if args.k == 3 and len(pts) and dim != 2:
        raise UnsupportedDimensionError(f"unsupported dimension {dim} for k=3 (planar only)")
    t0 = time.perf_counter()
    result = solver(pts, seed=args.seed)
    elapsed = (time.perf_counter() - t0) * 1e3
    doc = result_document(result, solver=name, dim=dim, seed=args.seed,
                          elapsed_ms=None if args.omit_timing else elapsed)
    if args.svg:
        if dim != 2 and len(pts):
            print("warning: --svg ignored for non-planar input", file=sys.stderr)
        else:
            with open(args.svg, "w", encoding="utf-8") as fh:
                fh.write(render_svg(pts, result, title=f"{name} k={args.k} cost={result.cost:.6g}"))
    _emit(doc, args.format)
    return 0


def cmd_oracle(args) -> int:
    pts = _load(args.input)
    dim = pts.shape[1]
    t0 = time.perf_counter()
    result = brute_msr(pts, args.k, force=args.force)
    elapsed = (time.perf_counter() - t0) * 1e3
    doc = result_document(result, solver="brute-force", dim=dim, seed=args.seed,
                          elapsed_ms=None if args.omit_timing else elapsed)
    extra = ""
    if args.check_lemmas:
        reports = [check_disjoint_optimum(pts, args.k, instance_id=args.input, force=args.force)]
        if args.k in (2, 3):
            reports.append(check_separator_lemma(pts, args.k, instance_id=args.input,
                                                 force=args.force, seed=args.seed))
        doc["lemmas"] = [r.to_dict() for r in reports]
        extra = "\n\n" + "\n".join(f"lemma {r.lemma:<14} {'holds' if r.holds else 'FAILS'}" for r in reports)
    _emit(doc, args.format, extra)
    return 0


def cmd_bench(args) -> int:
    dist = {"blobs": "gaussian-blobs"}.get(args.dist, args.dist)
    _, solver = SOLVERS[args.k]
    timings, fit = bench.scaling_report(lambda p: solver(p, seed=args.seed), args.sizes, dim=args.dim,
                                        distribution=dist, trials=args.trials, seed=args.seed)
    report = {
        "k": args.k,
        "dim": args.dim,
        "distribution": dist,
        "trials": args.trials,
        "rows": [{"n": t.n, "median_s": t.median, "p10_s": t.p10, "p90_s": t.p90,
                  "deterministic": t.deterministic} for t in timings],
        "slope": fit.slope,
        "r2": fit.r2,
    }
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(f"k={args.k} dim={args.dim} dist={dist} trials={args.trials}")
        print(f"{'n':>10}  {'median_s':>10}  {'p10_s':>10}  {'p90_s':>10}")
        for r in report["rows"]:
            print(f"{r['n']:>10}  {r['median_s']:>10.4f}  {r['p10_s']:>10.4f}  {r['p90_s']:>10.4f}")
        print(f"log-log slope {fit.slope:.3f}  (R^2 {fit.r2:.3f})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="msr", description="Exact k-MinSumRadius clustering for k <= 3.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        p.add_argument("--k", type=int, choices=(1, 2, 3), required=True)
        if with_input:
            p.add_argument("--input", required=True, help="point file (one point per line)")
            p.add_argument("--format", choices=("json", "text"), default="json")
            p.add_argument("--omit-timing", action="store_true",
                           help="leave elapsed_ms out so output is byte-reproducible")
        p.add_argument("--seed", type=_seed, default=DEFAULT_SEED)

    p = sub.add_parser("solve", help="run the exact sweep solver")
    common(p)
    p.add_argument("--svg", help="write an SVG drawing (planar input only)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="run the exhaustive brute-force solver")
    common(p)
    p.add_argument("--check-lemmas", action="store_true")
    p.add_argument("--force", action="store_true", help="ignore the instance size guard")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="measure runtime scaling")
    common(p, with_input=False)
    p.add_argument("--sizes", type=parse_sizes, required=True)
    p.add_argument("--dist", default="uniform",
                   choices=("uniform", "blobs", "gaussian-blobs", "circle-boundary", "collinear", "duplicates"))
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "trials", 1) < 1:
        parser.error("--trials must be at least 1")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UnsupportedDimensionError, DimensionMismatchError) as exc:
        print(f"error: unsupported dimension: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_GUARD


if __name__ == "__main__":
    sys.exit(main())
