"""Command line: ``rzsearch solve`` and ``rzsearch bench``."""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from . import board, hexgame
from .bench import DEFAULT_CONFIGS, Config, ordering_for, run_bench
from .errors import RzError
from .problem import load_problem
from .prooffile import ProofFile, proof_header, write_proof
from .solver import SearchBudget, Verdict, achieve_goal

EXIT_DECIDED, EXIT_ERROR, EXIT_UNKNOWN = 0, 1, 2


def _on_off(text: str) -> bool:
    if text not in ("on", "off"):
        raise argparse.ArgumentTypeError("expected 'on' or 'off'")
    return text == "on"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rzsearch", description="Relevance-zone search for Go and Hex problems.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve one problem file (.sgf or .hex)")
    s.add_argument("file")
    s.add_argument("--rules", choices=("go", "killall", "hex"), help="override the inferred game")
    s.add_argument("--max-nodes", type=int, default=1_000_000)
    s.add_argument("--max-depth", type=int, default=64)
    s.add_argument("--ordering", default="auto",
                   help="lex, liberty or file:<priors path>; auto (default) uses a sidecar .priors file if present")
    s.add_argument("--no-rzs", action="store_true", help="plain search without zones")
    s.add_argument("--pass-and", type=_on_off, default=True, metavar="on|off",
                   help="allow the refuting side to pass (default on)")
    s.add_argument("--proof-out", help="write the solution tree here")

    b = sub.add_parser("bench", help="run every problem in a directory under several configurations")
    b.add_argument("dir")
    b.add_argument("--configs", nargs="+", default=[c.label for c in DEFAULT_CONFIGS],
                   help="entries like rzs, plain, rzs:liberty (default: plain rzs)")
    b.add_argument("--max-nodes", type=int, default=200_000)
    b.add_argument("--max-depth", type=int, default=64)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--timing", action="store_true", help="include wall time in the table")
    b.add_argument("--report", help="also write the table to this path")
    return ap


def _render(spec, p, rz) -> str:
    if spec.game == "hex":
        return hexgame.render(p, rz)
    return board.render(p, rz)


def cmd_solve(args, out) -> int:
    spec = load_problem(args.file, args.rules)
    if args.rules and args.rules != spec.game:
        spec = spec.with_game(args.rules)
    rules = spec.rules(pass_and=args.pass_and)
    budget = SearchBudget(max_nodes=args.max_nodes, max_depth=args.max_depth)
    ordering = ordering_for(Path(args.file), spec, args.ordering)
    p = spec.position()
    result = achieve_goal(p, rules, budget, ordering, rzs=not args.no_rzs)
    print(_render(spec, p, result.rz), file=out)
    rz_size = len(result.rz) if result.rz is not None else 0
    line = f"{result.status.name} nodes={result.stats.nodes} rz_size={rz_size}"
    if result.status is Verdict.FAIL and result.repetition_caveat:
        line += " caveat=repetition"
    print(line, file=out)
    if args.proof_out:
        flags = f"pass_and={'on' if args.pass_and else 'off'}" if spec.game != "hex" else "-"
        header = proof_header(result, game=spec.game, goal=rules.ident(), size=spec.size, rules_flags=flags,
                              ordering=ordering.describe(), budget=budget, rzs=not args.no_rzs)
        write_proof(args.proof_out, ProofFile(header, result.tree), spec.size)
    return EXIT_UNKNOWN if result.status is Verdict.UNKNOWN else EXIT_DECIDED


def cmd_bench(args, out) -> int:
    configs = [Config.parse(c) for c in args.configs]
    budget = SearchBudget(max_nodes=args.max_nodes, max_depth=args.max_depth)
    report = run_bench(args.dir, configs, budget, jobs=args.jobs)
    text = report.format(timing=args.timing)
    out.write(text)
    if args.report:
        Path(args.report).write_text(text)
    for name, why in report.skipped:
        print(f"warning: skipped {name}: {why}", file=sys.stderr)
    return EXIT_ERROR if report.skipped else EXIT_DECIDED


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            if args.command == "solve":
                return cmd_solve(args, out)
            return cmd_bench(args, out)
    except (OSError, RzError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
