"""Run the three solvers over the bundled suites and print summary tables.

Writes per-run and per-suite CSVs next to this script unless --out is
given.  An external hard set in line format can be added with --extra.

Usage:
    python scripts/run_benchmarks.py [--out DIR] [--extra FILE] [--jobs N]
"""
import argparse
import pathlib
import sys

from sudokulab.bench import export_reports_csv, export_stats_csv, format_stats_table, load_suite, run_bench, summarize
from sudokulab.datasets import suite_path


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=pathlib.Path, default=pathlib.Path(__file__).parent)
    ap.add_argument("--extra", help="additional suite file, one puzzle per line")
    ap.add_argument("--base-seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    suites = [load_suite(suite_path(name), name) for name in ("easy", "medium", "hard")]
    if args.extra:
        suites.append(load_suite(args.extra, pathlib.Path(args.extra).stem))

    all_records = []
    all_stats = []
    for suite in suites:
        print(f"running {suite.name} ({len(suite)} puzzles) ...", file=sys.stderr)
        records = run_bench(suite, base_seed=args.base_seed, jobs=args.jobs)
        all_records.extend(records)
        all_stats.extend(summarize(records))

    print(format_stats_table(all_stats))
    export_reports_csv(all_records, args.out / "bench_reports.csv")
    export_stats_csv(all_stats, args.out / "bench_stats.csv")
    print(f"wrote {args.out / 'bench_reports.csv'} and {args.out / 'bench_stats.csv'}",
          file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
