"""Command-line entry point: ``klmprep {plan,verify,sweep-ratio,sweep-success,threshold}``.

Exit codes: 0 success, 2 invalid input, 3 internal inconsistency.
"""
from __future__ import annotations

import argparse
import math
import sys

from . import experiments, serialize
from .errors import KlmError
from .klm import load_spec
from .planner import FIDELITY_TOL, STRATEGIES, plan, simulate_plan, strategy_threshold

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="klmprep", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_output(p):
        p.add_argument("--output", "-o", default="-", help="output path (default: standard output)")
        return p

    for name in ("plan", "verify"):
        p = with_output(sub.add_parser(name))
        p.add_argument("spec_file", help='JSON file {"amplitudes": [[re, im], ...]}')
        p.add_argument("--strategy", choices=STRATEGIES, default="optimal")

    p = with_output(sub.add_parser("sweep-ratio", help="max reachable ratio and gate success vs phase"))
    p.add_argument("--phi-min", type=float, default=0.0)
    p.add_argument("--phi-max", type=float, default=math.pi)
    p.add_argument("--points", type=int, default=1000)

    p = with_output(sub.add_parser("sweep-success", help="optimal success and settings vs ratio"))
    p.add_argument("--r-min", type=float, default=0.01)
    p.add_argument("--r-max", type=float, default=3.0)
    p.add_argument("--points", type=int, default=300)

    with_output(sub.add_parser("threshold", help="ratio where the optimal phase jumps to pi"))
    return ap


def _run(args) -> tuple[int, str]:
    if args.command in ("plan", "verify"):
        p = plan(load_spec(args.spec_file), args.strategy)
        if args.command == "plan":
            return EXIT_OK, serialize.dumps(serialize.plan_to_json(p))
        _, fid = simulate_plan(p)
        out = {
            "strategy": p.strategy,
            "fidelity": serialize.r12(fid),
            "total": serialize.r12(p.report.total),
            "baseline": serialize.r12(p.report.baseline),
            "improvement_percent": serialize.r12(p.report.improvement_percent),
        }
        code = EXIT_OK if fid >= 1 - FIDELITY_TOL else EXIT_INTERNAL
        return code, serialize.dumps(out)
    if args.command == "sweep-ratio":
        rows = experiments.sweep_ratio(args.phi_min, args.phi_max, args.points)
        return EXIT_OK, experiments.to_csv(rows, experiments.RATIO_HEADER)
    if args.command == "sweep-success":
        rows = experiments.sweep_success(args.r_min, args.r_max, args.points)
        return EXIT_OK, experiments.to_csv(rows, experiments.SUCCESS_HEADER)
    if args.command == "threshold":
        out = {"r_star": serialize.r12(strategy_threshold()), "paper_value": experiments.PAPER_THRESHOLD}
        return EXIT_OK, serialize.dumps(out)
    raise AssertionError(args.command)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, text = _run(args)
    except KlmError as exc:
        print(f"klmprep: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if code == EXIT_INTERNAL:
        print("klmprep: simulated fidelity below tolerance", file=sys.stderr)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
