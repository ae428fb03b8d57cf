"""Command-line front end.

``impsynth run problem.json`` synthesizes one problem and prints the
completed program; ``impsynth bench corpus_dir`` reruns a directory of
problems and writes a CSV report with charts.

Exit codes: 0 solved, 2 search exhausted, 3 timed out, 64 bad usage or
malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import report as report_mod
from .interp import is_solution
from .lang import pretty, size
from .problem import Problem, ProblemError, load_problem
from .report import BenchRow
from .search import EXHAUSTED, SOLVED, TIMED_OUT, SearchConfig, SearchStats, synthesize

EXIT_SOLVED = 0
EXIT_EXHAUSTED = 2
EXIT_TIMEOUT = 3
EXIT_USAGE = 64

MODES = ("base", "opt", "ours")


def _config_from_args(args: argparse.Namespace) -> SearchConfig:
    cfg = SearchConfig.for_mode(args.mode)
    if args.no_prune:
        cfg.pruning = False
    if args.no_normalize:
        cfg.normalization = False
    cfg.max_size = args.max_size
    cfg.fuel = args.fuel
    cfg.time_budget = args.timeout
    return cfg


def _add_search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=MODES, default="ours",
                   help="flag bundle: base (plain), opt (+normalization), ours (+pruning)")
    p.add_argument("--no-prune", action="store_true", help="disable static pruning")
    p.add_argument("--no-normalize", action="store_true", help="disable state normalization")
    p.add_argument("--max-size", type=int, default=40, help="largest candidate size to consider")
    p.add_argument("--fuel", type=int, default=10_000, help="execution step budget per example")
    p.add_argument("--timeout", type=float, default=None, help="wall-clock budget in seconds")


def _stats_record(name: str, mode: str, stats: SearchStats) -> dict:
    return {
        "name": name,
        "mode": mode,
        "outcome": stats.outcome,
        "seconds": round(stats.elapsed, 6),
        "expanded": stats.expanded,
        "pruned": stats.pruned,
        "deduplicated": stats.deduplicated,
        "checked": stats.checked,
        "solution_size": size(stats.solution) if stats.solution else None,
        "solution": pretty(stats.solution) if stats.solution else None,
    }


def _run_one(problem: Problem, cfg: SearchConfig) -> SearchStats:
    stats = synthesize(problem, cfg)
    if stats.solution is not None:
        # re-verify before reporting anything; a search bug must not
        # surface as a wrong "solution"
        if not is_solution(stats.solution, problem.examples, cfg.fuel,
                           set(problem.resources.ivars)):
            raise RuntimeError(
                f"internal error: candidate for {problem.name or 'problem'} "
                "failed re-verification"
            )
    return stats


def cmd_run(args: argparse.Namespace) -> int:
    try:
        problem = load_problem(args.problem)
    except ProblemError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    cfg = _config_from_args(args)
    mode = args.mode
    stats = _run_one(problem, cfg)

    if stats.outcome == SOLVED:
        print(pretty(stats.solution))
    print(
        f"# outcome={stats.outcome} seconds={stats.elapsed:.3f} "
        f"expanded={stats.expanded} pruned={stats.pruned} "
        f"deduplicated={stats.deduplicated} checked={stats.checked}"
    )
    if args.stats_json:
        Path(args.stats_json).write_text(
            json.dumps(_stats_record(problem.name, mode, stats), indent=2) + "\n"
        )
    if stats.outcome == SOLVED:
        return EXIT_SOLVED
    if stats.outcome == TIMED_OUT:
        return EXIT_TIMEOUT
    return EXIT_EXHAUSTED


def cmd_bench(args: argparse.Namespace) -> int:
    corpus = Path(args.corpus)
    if not corpus.is_dir():
        print(f"error: {corpus} is not a directory", file=sys.stderr)
        return EXIT_USAGE
    files = sorted(corpus.glob("*.json"))
    modes = MODES if args.mode == "all" else (args.mode,)
    out_dir = Path(args.out_dir)

    rows: list[BenchRow] = []
    for path in files:
        for mode in modes:
            name = path.stem
            try:
                problem = load_problem(path)
                cfg = SearchConfig.for_mode(mode)
                cfg.max_size = args.max_size
                cfg.fuel = args.fuel
                cfg.time_budget = args.timeout
                stats = _run_one(problem, cfg)
                rows.append(
                    BenchRow(
                        name=name,
                        mode=mode,
                        outcome=stats.outcome,
                        seconds=round(stats.elapsed, 6),
                        expanded=stats.expanded,
                        pruned=stats.pruned,
                        deduplicated=stats.deduplicated,
                        solution_size=size(stats.solution) if stats.solution else None,
                        solution=pretty(stats.solution) if stats.solution else "",
                    )
                )
            except (ProblemError, RuntimeError) as e:
                rows.append(
                    BenchRow(
                        name=name, mode=mode, outcome=f"error: {e}", seconds=0.0,
                        expanded=0, pruned=0, deduplicated=0, solution_size=None,
                    )
                )
            if not args.quiet:
                r = rows[-1]
                print(f"{r.name} [{r.mode}]: {r.outcome} in {r.seconds:.2f}s "
                      f"(expanded {r.expanded})")
    csv_path = out_dir / "report.csv"
    report_mod.write_csv(rows, csv_path)
    figures = report_mod.render_figures(rows, out_dir)
    print(report_mod.format_table(rows))
    print(f"\nreport: {csv_path}")
    for f in figures:
        print(f"figure: {f}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="impsynth",
        description="Complete partial imperative programs from input-output examples.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="synthesize a single problem file")
    p_run.add_argument("problem", help="path to a problem JSON file")
    _add_search_flags(p_run)
    p_run.add_argument("--stats-json", default=None, help="write run statistics to this file")
    p_run.set_defaults(func=cmd_run)

    p_bench = sub.add_parser("bench", help="run every problem in a directory")
    p_bench.add_argument("corpus", help="directory of problem JSON files")
    p_bench.add_argument("--mode", choices=MODES + ("all",), default="ours")
    p_bench.add_argument("--max-size", type=int, default=40)
    p_bench.add_argument("--fuel", type=int, default=10_000)
    p_bench.add_argument("--timeout", type=float, default=None,
                         help="wall-clock budget per problem, in seconds")
    p_bench.add_argument("--out-dir", default="bench_out",
                         help="directory for the CSV report and figures")
    p_bench.add_argument("--quiet", action="store_true", help="suppress per-run progress")
    p_bench.set_defaults(func=cmd_bench)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
