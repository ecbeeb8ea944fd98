"""Command-line entry point.

    polyvf dims --n 3 --max-degree 4
    polyvf generates --n 2 --expr "x1*(x1 d1 + x2 d2)" --oracle
    polyvf verify --n 2 --max-degree 3 --json out.json --seed 42

Exit status is 0 when every check passes, 1 when any check fails and 2 for
usage errors (bad flags, unparsable expressions, out-of-range parameters).
Colour is used on a terminal unless NO_COLOR is set; POLYVF_COLOR=always or
POLYVF_COLOR=never overrides the terminal test.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from pathlib import Path
from typing import List, Sequence, TextIO

from . import verification as V
from .generation import CutoffTooSmall
from .parsing import ParseError, parse_derivation
from .report import build_report, dumps

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

COMMANDS = ("dims", "decompose", "hw", "products", "iso", "generates", "verify")


class UsageError(Exception):
    pass


def _use_colour(stream: TextIO) -> bool:
    forced = os.environ.get("POLYVF_COLOR", "").lower()
    if forced in ("always", "1", "yes"):
        return True
    if forced in ("never", "0", "no") or "NO_COLOR" in os.environ:
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _paint(text: str, ok: bool, colour: bool) -> str:
    if not colour:
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def _bool_arg(text: str) -> bool:
    low = text.lower()
    if low in ("true", "yes", "1"):
        return True
    if low in ("false", "no", "0"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="number of variables (>= 2)")
    common.add_argument("--max-degree", type=int, default=3, help="largest graded degree examined")
    common.add_argument("--cutoff", type=int, default=None, help="truncation degree for the closure oracle")
    common.add_argument("--json", metavar="PATH", default=None, help="write the JSON report here ('-' for stdout)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised checks")
    common.add_argument("--samples", type=int, default=100, help="random samples per randomised check")

    parser = argparse.ArgumentParser(prog="polyvf", description="Checks on polynomial vector fields.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "dims": "dimension table of the graded pieces and their two submodules",
        "decompose": "direct-sum decomposition, projections and invariance",
        "hw": "maximal vectors, weights and irreducibility certificates",
        "products": "classify brackets between graded pieces",
        "iso": "pairwise isomorphism classes of the submodules",
        "generates": "does a field generate everything with the affine fields",
        "verify": "run every family",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common], help=helps[name], description=helps[name])
        if name == "generates":
            p.add_argument("--expr", required=True, help='vector field, e.g. "x1^2 d1 - 2/3*x1*x2 d2"')
            p.add_argument("--oracle", action="store_true", help="also run the truncated closure")
            p.add_argument("--expect", type=_bool_arg, default=None, help="fail unless the verdict equals this")
    return parser


def _sections(args: argparse.Namespace) -> List[V.Section]:
    n, top = args.n, args.max_degree
    if n < 2:
        raise UsageError("--n must be at least 2")
    if top < 0 and args.command != "generates":
        raise UsageError("--max-degree must be non-negative")
    if args.samples < 0:
        raise UsageError("--samples must be non-negative")
    rng = random.Random(args.seed)
    cmd = args.command
    if cmd == "dims":
        return [V.run_dims(n, top)]
    if cmd == "decompose":
        return [V.run_decompose(n, top, rng, args.samples)]
    if cmd == "hw":
        return [V.run_hw(n, top)]
    if cmd == "products":
        if top < 1:
            raise UsageError("products needs --max-degree >= 1")
        return [V.run_products(n, top)]
    if cmd == "iso":
        return [V.run_iso(n, top)]
    if cmd == "generates":
        try:
            D = parse_derivation(args.expr, n)
        except ParseError as exc:
            raise UsageError(f"cannot parse expression: {exc}") from exc
        if args.cutoff is not None and args.cutoff < 1:
            raise UsageError("--cutoff must be at least 1")
        try:
            return [V.run_generates(D, oracle=args.oracle, cutoff=args.cutoff, expect=args.expect)]
        except CutoffTooSmall as exc:
            raise UsageError(str(exc)) from exc
    if cmd == "verify":
        if top < 1:
            raise UsageError("verify needs --max-degree >= 1")
        return V.run_verify(n, top, args.seed, args.samples)
    raise UsageError(f"unknown command {cmd}")


def _parameters(args: argparse.Namespace) -> dict:
    params = {
        "n": args.n,
        "max_degree": args.max_degree,
        "cutoff": args.cutoff,
        "seed": args.seed,
        "samples": args.samples,
    }
    if args.command == "generates":
        params.update(expr=args.expr, oracle=args.oracle, expect=args.expect)
    return params


def _print_text(sections: Sequence[V.Section], report: dict, out: TextIO) -> None:
    colour = _use_colour(out)
    for sec in sections:
        status = _paint("PASS" if sec.passed else "FAIL", sec.passed, colour)
        print(f"== {sec.name} [{status}]", file=out)
        for line in sec.lines:
            print(f"  {line}", file=out)
        for name, ok in sec.checks:
            if not ok:
                print("  " + _paint(f"failed: {name}", False, colour), file=out)
    s = report["summary"]
    verdict = _paint("ok" if s["ok"] else "FAILED", s["ok"], colour)
    print(f"{s['passed']}/{s['checks']} checks passed: {verdict}", file=out)


def run_command(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
                stderr: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        sections = _sections(args)
    except (UsageError, ValueError) as exc:
        print(f"polyvf {args.command}: error: {exc}", file=err)
        return EXIT_USAGE
    report = build_report(args.command, _parameters(args), sections)
    if args.json == "-":
        out.write(dumps(report))
    else:
        _print_text(sections, report, out)
        if args.json:
            Path(args.json).write_text(dumps(report), encoding="utf-8")
    return EXIT_OK if report["summary"]["ok"] else EXIT_FAIL


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
