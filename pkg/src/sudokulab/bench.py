"""Benchmark harness: run solver methods over puzzle suites, re-check every
claimed solution independently, and summarize success rates and timings."""
from __future__ import annotations

import csv
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from . import annealing, backtracking, projections
from .board import Board, ClueMask, clues_respected, is_solved, parse_puzzle, PuzzleError
from .report import SolveReport

METHODS = ("backtracking", "annealing", "projection")

REPORTS_HEADER = "suite,puzzle_id,method,solved,wall_time_s,work"
STATS_HEADER = "suite,method,success_rate,min_s,median_s,mean_s,max_s"


@dataclass(frozen=True)
class PuzzleSuite:
    name: str
    puzzles: tuple[tuple[int, Board, ClueMask], ...]

    def __len__(self) -> int:
        return len(self.puzzles)


@dataclass(frozen=True)
class BenchRecord:
    suite: str
    puzzle_id: int
    report: SolveReport


@dataclass(frozen=True)
class SummaryStats:
    suite: str
    method: str
    success_rate: float
    time_min: float | None
    time_median: float | None
    time_mean: float | None
    time_max: float | None


def load_suite(path, name: str) -> PuzzleSuite:
    """One line-format puzzle per line; '#' comments and blank lines ignored."""
    puzzles = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            try:
                board, mask = parse_puzzle(stripped)
            except PuzzleError as exc:
                raise PuzzleError(f"{path}:{lineno}: {exc}") from exc
            puzzles.append((len(puzzles), board, mask))
    return PuzzleSuite(name=name, puzzles=tuple(puzzles))


def _solve_one(
    puzzle: Board,
    mask: ClueMask,
    method: str,
    seed: int,
    anneal_config: annealing.AnnealConfig,
    projection_config: projections.ProjectionConfig,
) -> SolveReport:
    try:
        if method == "backtracking":
            return backtracking.solve(puzzle, mask)
        if method == "annealing":
            cfg = replace(anneal_config, seed=seed)
            return annealing.anneal(puzzle, mask, cfg)
        if method == "projection":
            return projections.solve_by_projection(puzzle, mask, projection_config)
        raise ValueError(f"unknown method {method!r}")
    except ValueError as exc:
        return SolveReport(method, False, puzzle, 0.0, 0, note=f"error: {exc}")


def _run_job(args) -> SolveReport:
    return _solve_one(*args)


def run_bench(
    suite: PuzzleSuite,
    methods=METHODS,
    anneal_config: annealing.AnnealConfig | None = None,
    projection_config: projections.ProjectionConfig | None = None,
    base_seed: int = 0,
    jobs: int = 1,
) -> list[BenchRecord]:
    """One report per (puzzle, method).  Annealing runs are seeded with
    base_seed + puzzle index so results do not depend on execution order.
    Every claimed solution is re-checked here; a board failing the check
    is demoted to unsolved rather than trusted."""
    if not suite.puzzles or not methods:
        raise ValueError("suite and methods must be nonempty")
    acfg = anneal_config or annealing.AnnealConfig()
    pcfg = projection_config or projections.ProjectionConfig()
    tasks = [
        (pid, puzzle, mask, method)
        for method in methods
        for pid, puzzle, mask in suite.puzzles
    ]
    job_args = [(p, m, meth, base_seed + pid, acfg, pcfg) for pid, p, m, meth in tasks]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_job, job_args))
    else:
        reports = [_run_job(a) for a in job_args]

    records = []
    for (pid, puzzle, mask, method), report in zip(tasks, reports):
        if report.solved and not (
            is_solved(report.board) and clues_respected(report.board, puzzle, mask)
        ):
            report = replace(report, solved=False, note="failed independent re-check")
        records.append(BenchRecord(suite.name, pid, report))
    return records


def summarize(records: list[BenchRecord]) -> list[SummaryStats]:
    """Per (suite, method) success rate plus timing stats over solved runs
    only; the median of an even count is the mean of the middle pair."""
    if not records:
        raise ValueError("no records to summarize")
    groups: dict[tuple[str, str], list[BenchRecord]] = {}
    for rec in records:
        groups.setdefault((rec.suite, rec.report.method), []).append(rec)
    stats = []
    for (suite, method), recs in groups.items():
        times = sorted(r.report.wall_time for r in recs if r.report.solved)
        rate = len(times) / len(recs)
        if times:
            stats.append(
                SummaryStats(
                    suite,
                    method,
                    rate,
                    min(times),
                    statistics.median(times),
                    statistics.fmean(times),
                    max(times),
                )
            )
        else:
            stats.append(SummaryStats(suite, method, rate, None, None, None, None))
    return stats


def _fmt(t: float | None) -> str:
    return "" if t is None else f"{t:.6f}"


def export_csv(rows, path) -> None:
    """Write either bench records or summary stats as CSV."""
    if rows and isinstance(rows[0], SummaryStats):
        export_stats_csv(rows, path)
    else:
        export_reports_csv(rows, path)


def export_reports_csv(records: list[BenchRecord], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(REPORTS_HEADER.split(","))
        for rec in records:
            writer.writerow(
                [
                    rec.suite,
                    rec.puzzle_id,
                    rec.report.method,
                    "true" if rec.report.solved else "false",
                    f"{rec.report.wall_time:.6f}",
                    rec.report.work,
                ]
            )


def export_stats_csv(stats: list[SummaryStats], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(STATS_HEADER.split(","))
        for s in stats:
            writer.writerow(
                [
                    s.suite,
                    s.method,
                    f"{s.success_rate:.6f}",
                    _fmt(s.time_min),
                    _fmt(s.time_median),
                    _fmt(s.time_mean),
                    _fmt(s.time_max),
                ]
            )


def format_stats_table(stats: list[SummaryStats]) -> str:
    header = f"{'suite':<10} {'method':<13} {'success':>8} {'min_s':>10} {'median_s':>10} {'mean_s':>10} {'max_s':>10}"
    lines = [header]
    for s in stats:
        lines.append(
            f"{s.suite:<10} {s.method:<13} {s.success_rate:>8.2f} "
            f"{_fmt(s.time_min) or '-':>10} {_fmt(s.time_median) or '-':>10} "
            f"{_fmt(s.time_mean) or '-':>10} {_fmt(s.time_max) or '-':>10}"
        )
    return "\n".join(lines)
