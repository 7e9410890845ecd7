"""Command-line front end: ``burstbounds {bound,sbc,sweep,verify}``.

Exit codes: 0 success, 1 verification or I/O failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import bounds, checks, surface
from .combinatorics import InvalidParameter


def _parse_range(text: str) -> tuple:
    try:
        lo, sep, hi = text.partition(":")
        lo = int(lo)
        hi = int(hi) if sep else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI or N, got {text!r}")
    return lo, hi


def _print_result(res: bounds.BoundResult, out) -> None:
    print(f"rhs: {res.rhs}", file=out)
    print(f"min_redundancy: {res.min_redundancy}", file=out)
    print(f"rate_upper: {res.rate_upper:.12g}", file=out)


def cmd_bound(args, out) -> int:
    geometry = bounds.CodeGeometry(args.t, args.v)
    if args.u is not None:
        cap = bounds.GapLimited(args.u)
    elif args.E is not None:
        cap = bounds.SymbolLimited(args.E)
    else:
        cap = bounds.FullSubblock()
    res = bounds.evaluate(bounds.BoundQuery(geometry, args.M, cap))
    print(f"query: t={args.t} v={args.v} n={geometry.n} M={args.M} {_describe(cap)}", file=out)
    _print_result(res, out)
    return 0


def _describe(cap) -> str:
    if isinstance(cap, bounds.GapLimited):
        return f"u={cap.u} (gap-limited)"
    if isinstance(cap, bounds.SymbolLimited):
        return f"E={cap.E} (symbol-limited)"
    return "full subblocks"


def cmd_sbc(args, out) -> int:
    rhs = bounds.sbc_rhs(args.n, args.u)
    print(f"query: n={args.n} u={args.u} (single burst)", file=out)
    _print_result(bounds.to_bound_result(rhs, args.n), out)
    if args.abramson:
        ab = bounds.abramson_rhs(args.n, args.u)
        print(f"abramson_rhs: {ab}", file=out)
        print(f"abramson_min_redundancy: {bounds.min_redundancy(ab)}", file=out)
        print("EQUAL" if ab == rhs else "DIFFERS", file=out)
    return 0


def cmd_sweep(args, out) -> int:
    spec = surface.SweepSpec(
        args.t, args.v, args.m, args.sym, workers=surface.resolve_workers(args.workers)
    )
    surf = surface.sweep(spec)
    text = surface.to_json(surf) if args.format == "json" else surface.to_csv(surf)
    if args.output == "-":
        out.write(text)
    else:
        try:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return 1
    skipped = spec.skipped_gap_symbols()
    if skipped:
        print(f"gap bound skipped for symbols {skipped}", file=sys.stderr)
    print(surface.summary_line(surf), file=sys.stderr if args.output == "-" else out)
    return 0


def cmd_verify(args, out) -> int:
    names = checks.SUITES if args.suite == "all" else (args.suite,)
    ok = True
    for name in names:
        res = checks.run_suite(name, max_x=args.max_x, max_v=args.max_v)
        ok &= res.passed
        if args.format == "jsonl":
            print(json.dumps({"suite": name, "passed": res.passed, "checked": res.checked,
                              "failures": res.failures}), file=out)
            for rep in res.reports:
                print(json.dumps({"suite": name, "discrepancy": rep.to_dict()}), file=out)
            continue
        print(f"{'PASS' if res.passed else 'FAIL'} {name} ({res.checked} checks)", file=out)
        for msg in res.failures:
            print(f"  failure: {msg}", file=out)
        if name == "subblock" and not res.reports:
            print("  discrepancies beyond the cyclic burst constraint: none", file=out)
        for rep in res.reports:
            print(f"  discrepancy v={rep.v} u={rep.u}: formula {rep.formula_count}, "
                  f"oracle {rep.oracle_count}", file=out)
            for m in rep.mismatches:
                print(f"    {m.pattern} weight={m.pattern.weight}: {m.reason}", file=out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="burstbounds", description="Code-rate bounds for phased-burst and single-burst correction."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="multiple phased-burst bound for one parameter set")
    p.add_argument("--t", type=int, required=True, help="number of subblocks")
    p.add_argument("--v", type=int, required=True, help="subblock length")
    p.add_argument("--M", type=int, required=True, help="max correctable subblocks")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--u", type=int, help="max cyclic burst length per subblock (gap bound)")
    mode.add_argument("--E", type=int, help="max correctable symbols per subblock (no-gap bound)")
    mode.add_argument("--full", action="store_true", help="whole subblocks correctable")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("sbc", help="single burst correction bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--abramson", action="store_true", help="also print the Abramson bound")
    p.set_defaults(func=cmd_sbc)

    p = sub.add_parser("sweep", help="rate surfaces over an (M, symbols) grid")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--m", type=_parse_range, required=True, metavar="LO:HI")
    p.add_argument("--sym", type=_parse_range, required=True, metavar="LO:HI")
    p.add_argument("--output", "-o", default="-", help="output file ('-' for stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=None,
                   help=f"worker processes (default ${surface.THREADS_ENV} or 1)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run the brute-force verification suites")
    p.add_argument("--suite", choices=("all",) + checks.SUITES, default="all")
    p.add_argument("--max-x", type=int, default=14)
    p.add_argument("--max-v", type=int, default=12)
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (InvalidParameter, ValueError) as exc:
        print(f"burstbounds {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
