"""Command line entry point: tables, identity checks, acceptance runs, fractions and path counts."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .acceptance import CRITERIA, PROFILES, run_criterion
from .cfrac import extract_sfraction
from .exact_core import CapExceeded, as_rational, fmt
from .paths import (CONFIGS, FAMILIES, NAMED_COUNTS, PathProblem, count_named, count_paths,
                    nonintersecting_tuples)
from .reports import FORMATS, VerificationReport, exit_code, render, run_target, serialize
from .series import SERIES_NAMES, build_series
from .targets import DEFAULT_CAPS, TABLES, VERIFY_TARGETS, Options


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return as_rational(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _point(text: str) -> tuple:
    try:
        x, y = (int(v) for v in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected x,y integers, got {text!r}") from exc
    return x, y


def _int_list(text: str) -> list:
    try:
        return [int(v) for v in text.replace(",", " ").split()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="pretty")

    parser = argparse.ArgumentParser(prog="hankel-lab", description="Exact Hankel determinant experiments.")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", parents=[common], help="print a table of values")
    table.add_argument("name", choices=sorted(TABLES))
    table.add_argument("--n", type=int, default=7)
    table.add_argument("--r", type=int)
    table.add_argument("--u", type=_rational)

    verify = sub.add_parser("verify", parents=[common], help="check a named identity")
    verify.add_argument("identity", choices=sorted(VERIFY_TARGETS))
    for opt in ("n", "r", "s", "order"):
        verify.add_argument(f"--{opt}", type=int)
    for opt in ("u", "c"):
        verify.add_argument(f"--{opt}", type=_rational)
    verify.add_argument("--max-n", type=int, default=DEFAULT_CAPS["n"])
    verify.add_argument("--max-r", type=int, default=DEFAULT_CAPS["r"])

    run_all = sub.add_parser("all", parents=[common], help="run every acceptance criterion")
    run_all.add_argument("--profile", choices=tuple(PROFILES), default="quick")

    frac = sub.add_parser("cfrac", parents=[common], help="continued fraction coefficients of a series")
    frac.add_argument("series", choices=SERIES_NAMES)
    frac.add_argument("--depth", type=int, default=8)
    frac.add_argument("--params", type=_rational, nargs="*", default=[])

    paths = sub.add_parser("paths", help="lattice path counts")
    psub = paths.add_subparsers(dest="paths_command", required=True)
    count = psub.add_parser("count", parents=[common], help="count paths of a family or a named set")
    count.add_argument("family", choices=FAMILIES + tuple(n for n in NAMED_COUNTS if n not in FAMILIES))
    count.add_argument("--start", type=_point)
    count.add_argument("--end", type=_point)
    count.add_argument("--r", type=int, default=1)
    count.add_argument("--shift", type=int, default=0)
    count.add_argument("--ceiling", type=_rational)
    count.add_argument("--params", type=_int_list, help="indices for a named set, e.g. 1,2")
    tuples = psub.add_parser("tuples", parents=[common], help="count nonintersecting path tuples")
    tuples.add_argument("config", choices=CONFIGS)
    tuples.add_argument("--n", type=int, default=3)
    return parser


def _emit_values(name: str, values: list, style: str, out) -> None:
    """One value per index; a value that is itself a list is a table row."""
    def text(v):
        return " ".join(fmt(x) for x in v) if isinstance(v, (list, tuple)) else fmt(v)

    if style == "json":
        out.write(json.dumps({"name": name, "values": [text(v) for v in values]}) + "\n")
    elif style == "csv":
        out.write("index,value\n")
        for i, v in enumerate(values):
            out.write(f"{i},{text(v)}\n")
    elif values and isinstance(values[0], (list, tuple)):
        out.write("".join(text(v) + "\n" for v in values))
    else:
        out.write(" ".join(text(v) for v in values) + "\n")


def _cmd_table(args, out) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    opts = Options(r=args.r, u=args.u, max_n=10 ** 6, max_r=10 ** 6)
    _emit_values(args.name, TABLES[args.name](args.n, opts), args.format, out)
    return 0


def _cmd_verify(args, out) -> int:
    opts = Options(n=args.n, r=args.r, s=args.s, u=args.u, c=args.c, order=args.order,
                   max_n=args.max_n, max_r=args.max_r)
    params = {k: v for k, v in (("n", args.n), ("r", args.r), ("s", args.s), ("u", args.u),
                                ("c", args.c), ("order", args.order)) if v is not None}
    report = run_target(args.identity, params, lambda: VERIFY_TARGETS[args.identity](opts))
    out.write(render([report], args.format))
    return exit_code([report])


def _cmd_all(args, out) -> int:
    reports = [run_target(f"criterion_{k:02d}", {"profile": args.profile},
                          lambda k=k: run_criterion(k, args.profile)) for k in CRITERIA]
    out.write(render(reports, args.format))
    return exit_code(reports)


def _cmd_cfrac(args, out) -> int:
    series = build_series(args.series, tuple(args.params), args.depth)
    frac = extract_sfraction(series, args.depth)
    _emit_values(f"{args.series} lambdas", list(frac.lambdas), args.format, out)
    return 0


def _cmd_paths(args, out) -> int:
    start = time.perf_counter()
    if args.paths_command == "tuples":
        value = nonintersecting_tuples(args.config, args.n)
        params = {"config": args.config, "n": args.n}
        target = "tuples"
    elif args.params is not None:
        if args.family not in NAMED_COUNTS:
            raise UsageError(f"{args.family!r} is not a named set; use --start and --end")
        value = count_named(args.family, args.params)
        params = {"params": args.params}
        target = args.family
    else:
        if args.start is None or args.end is None:
            raise UsageError("a path family needs --start and --end (or --params for a named set)")
        if args.family not in FAMILIES:
            raise UsageError(f"{args.family!r} is a named set; give its indices with --params")
        problem = PathProblem(args.start, args.end, args.family, args.r, args.shift, args.ceiling)
        value = count_paths(problem)
        params = {"start": list(args.start), "end": list(args.end), "r": args.r, "shift": args.shift}
        if args.ceiling is not None:
            params["ceiling"] = args.ceiling
        target = args.family
    value = list(value) if isinstance(value, tuple) else value
    elapsed = round((time.perf_counter() - start) * 1000, 3)
    report = VerificationReport(target, params, "pass", serialize(value), "", elapsed)
    if args.format == "pretty":
        out.write(serialize(value) + "\n")
    else:
        out.write(render([report], args.format))
    return 0


COMMANDS = {"table": _cmd_table, "verify": _cmd_verify, "all": _cmd_all, "cfrac": _cmd_cfrac,
            "paths": _cmd_paths}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except CapExceeded as exc:
        print(f"hankel-lab: skipped: {exc}", file=sys.stderr)
        return 0
    except (UsageError, ValueError) as exc:
        print(f"hankel-lab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
