"""Command-line entry point: solve, verify, and bench subcommands.

Exit codes: 0 success, 1 solver failure / non-unique verification,
2 usage or input errors.  Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import sys

from . import annealing, backtracking, bench, projections
from .board import PuzzleError, parse_puzzle, render_board


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sudokulab")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve one puzzle with a chosen method")
    solve.add_argument("--method", required=True, choices=bench.METHODS)
    _add_puzzle_args(solve)
    solve.add_argument("--line", action="store_true", help="print the result in line format")
    solve.add_argument("--seed", type=int, default=0)
    solve.add_argument("--max-iters", type=int, default=200_000, help="annealing iteration cap")
    solve.add_argument("--t0", type=float, default=200.0, help="annealing initial temperature")
    solve.add_argument("--cool", type=float, default=0.99, help="annealing cooling factor")
    solve.add_argument("--period", type=int, default=50, help="proposals per cooling step")
    solve.add_argument("--max-sweeps", type=int, default=2000, help="projection sweep cap")
    solve.add_argument("--tol", type=float, default=1e-9, help="projection stall tolerance")

    verify = sub.add_parser("verify", help="check whether a puzzle has a unique solution")
    _add_puzzle_args(verify)

    b = sub.add_parser("bench", help="run a suite through the benchmark harness")
    b.add_argument("--suite", required=True, help="suite file, one 81-char puzzle per line")
    b.add_argument("--methods", default=",".join(bench.METHODS),
                   help="comma-separated method list")
    b.add_argument("--csv", help="write per-run reports CSV here")
    b.add_argument("--stats-csv", help="write summary stats CSV here")
    b.add_argument("--base-seed", type=int, default=0)
    b.add_argument("--jobs", type=int, default=1)
    return parser


def _add_puzzle_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("puzzle", nargs="?", help="inline 81-character puzzle")
    sub.add_argument("--input", help="path to a puzzle file")


def _read_puzzle(args):
    if args.input:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    elif args.puzzle:
        text = args.puzzle
    else:
        raise PuzzleError("no puzzle given: pass an inline puzzle or --input PATH")
    return parse_puzzle(text)


def _cmd_solve(args) -> int:
    puzzle, mask = _read_puzzle(args)
    if args.method == "backtracking":
        report = backtracking.solve(puzzle, mask)
    elif args.method == "annealing":
        cfg = annealing.AnnealConfig(
            initial_temperature=args.t0,
            cooling_factor=args.cool,
            cooling_period=args.period,
            max_iterations=args.max_iters,
            reset_at=min(100_000, args.max_iters),
            seed=args.seed,
        )
        report = annealing.anneal(puzzle, mask, cfg)
    else:
        cfg = projections.ProjectionConfig(max_sweeps=args.max_sweeps, stall_tolerance=args.tol)
        report = projections.solve_by_projection(puzzle, mask, cfg)
    if not report.solved:
        print(
            f"{args.method} failed after {report.work} steps"
            + (f" (cost {report.final_cost})" if report.final_cost is not None else ""),
            file=sys.stderr,
        )
        return 1
    print(render_board(report.board, "line" if args.line else "grid"))
    return 0


def _cmd_verify(args) -> int:
    puzzle, mask = _read_puzzle(args)
    solutions = backtracking.enumerate_solutions(puzzle, mask, cap=2)
    if len(solutions) == 0:
        print("unsatisfiable")
        return 1
    if len(solutions) == 1:
        print("unique")
        return 0
    print("multiple")
    return 1


def _cmd_bench(args) -> int:
    methods = tuple(m.strip() for m in args.methods.split(",") if m.strip())
    for m in methods:
        if m not in bench.METHODS:
            raise PuzzleError(f"unknown method {m!r}")
    suite = bench.load_suite(args.suite, name="suite")
    records = bench.run_bench(
        suite, methods=methods, base_seed=args.base_seed, jobs=args.jobs
    )
    stats = bench.summarize(records)
    if args.csv:
        bench.export_reports_csv(records, args.csv)
    if args.stats_csv:
        bench.export_stats_csv(stats, args.stats_csv)
    print(bench.format_stats_table(stats))
    return 0


def run_cli(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_bench(args)
    except (PuzzleError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    entry()
