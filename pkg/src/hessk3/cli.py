"""``hessk3`` command line: run check suites and print a report."""
from __future__ import annotations

import argparse
import sys

from .report import render_json, render_text
from .suites import DEFAULT_ORDER, SUITES, RunConfig, run


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hessk3", description="Exact verification suites.")
    ap.add_argument("--suite", action="append", choices=("all",) + SUITES,
                    help="suite to run (repeatable, default all)")
    ap.add_argument("--order", type=int, default=DEFAULT_ORDER,
                    help=f"theta truncation order in unit-1/8 exponents (default {DEFAULT_ORDER})")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=None, help="override every random sample count")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--emit-series", metavar="PATH", help="write generator series as JSON")
    ap.add_argument("--timings", action="store_true", help="include elapsed times in JSON")
    return ap


def config_from(args) -> RunConfig:
    chosen = args.suite or ["all"]
    suites = SUITES if "all" in chosen else tuple(dict.fromkeys(chosen))
    return RunConfig(suites=suites, order=args.order, seed=args.seed, samples=args.samples,
                     fmt=args.format, emit_series=args.emit_series, timings=args.timings)


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        cfg = config_from(args)
    except ValueError as exc:
        ap.print_usage(sys.stderr)
        print(f"hessk3: error: {exc}", file=sys.stderr)
        return 2
    results, summary = run(cfg)
    if cfg.fmt == "json":
        print(render_json(cfg.to_json(), results, cfg.timings))
    else:
        print(render_text(results))
    return 1 if summary["fail"] else 0


if __name__ == "__main__":
    sys.exit(main())
