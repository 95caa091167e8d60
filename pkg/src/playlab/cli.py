"""Command-line entry points: simulate, analyze, bench."""

from __future__ import annotations

import argparse
import sys
import time

from . import engine, harness
from .harness import ConfigError, ExperimentConfig
from .reports import REPORT_NAMES, ReportSelectionError, emit_reports
from .traces import TraceFormatError, read_traces, write_traces


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="playlab",
        description="Simulate skill-varied MCTS agents on adversarial games "
        "and analyze the recorded playtraces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run a seeded experiment grid and record traces")
    sim.add_argument("--domain", choices=harness.DOMAINS, help="game domain to simulate")
    sim.add_argument("--config", help="JSON experiment config file")
    sim.add_argument("--out", default="traces.jsonl", help="output JSONL path")
    sim.add_argument("--seed", type=int, help="master seed override")
    sim.add_argument("--games", type=int, help="games per pairing override")
    sim.add_argument("--p0", help="first player budget: weak|moderate|strong or a number")
    sim.add_argument("--p1", help="second player budget: weak|moderate|strong or a number")
    sim.add_argument("--profile", choices=["full", "desk"], default=None,
                     help="desk lowers budgets (/10) and games (30) to laptop scale")
    sim.add_argument("--jobs", type=int, default=1, help="worker processes (whole games)")
    sim.add_argument("--engine", choices=[engine.AUTO, engine.FAST, engine.PURE],
                     default=engine.AUTO)
    sim.add_argument("--dictionary", help="word list path (scrabble)")
    sim.add_argument("--cardset", help="card set path (cardonomicon)")
    sim.add_argument("--quiet", action="store_true")

    ana = sub.add_parser("analyze", help="compute metric reports from a trace file")
    ana.add_argument("--traces", required=True, help="JSONL trace file")
    ana.add_argument("--report", default=",".join(REPORT_NAMES),
                     help=f"comma-separated subset of: {', '.join(REPORT_NAMES)}")
    ana.add_argument("--format", choices=["csv", "json"], default="csv")
    ana.add_argument("--min-support", type=float, default=0.05)
    ana.add_argument("--out-dir", default="reports")

    bench = sub.add_parser("bench", help="compare pure and compiled engines")
    bench.add_argument("--domain", choices=harness.DOMAINS, default="cardonomicon")
    bench.add_argument("--games", type=int, default=4)
    bench.add_argument("--rollouts", type=int, default=30)
    bench.add_argument("--seed", type=int, default=7)
    return parser


def _sim_config(args) -> ExperimentConfig:
    if args.config:
        config = harness.load_config(args.config)
        if args.domain and args.domain != config.domain:
            raise ConfigError(
                f"--domain {args.domain} conflicts with config domain {config.domain}"
            )
    elif args.domain:
        config = harness.parse_config({"domain": args.domain})
    else:
        raise ConfigError("either --config or --domain is required")

    overrides = {}
    if args.seed is not None:
        overrides["master_seed"] = args.seed
    if args.games is not None:
        if args.games < 1:
            raise ConfigError("--games must be >= 1")
        overrides["games_per_pairing"] = args.games
    if args.dictionary is not None:
        overrides["dictionary_path"] = args.dictionary
    if args.cardset is not None:
        overrides["cardset_path"] = args.cardset
    if args.p0 is not None or args.p1 is not None:
        if args.p0 is None or args.p1 is None:
            raise ConfigError("--p0 and --p1 must be given together")
        presets = config.presets or harness.preset_table(config.domain)
        pairing = (
            harness.resolve_budget(args.p0, presets),
            harness.resolve_budget(args.p1, presets),
        )
        overrides["pairings"] = (pairing,)
    if overrides:
        from dataclasses import replace

        config = replace(config, **overrides)
    if args.profile == "desk":
        config = harness.apply_desk_profile(config)
    return config


def _cmd_simulate(args) -> int:
    config = _sim_config(args)
    total = config.total_games()
    if not args.quiet:
        backend = engine.resolve_backend(args.engine)
        print(
            f"simulating {total} {config.domain} games "
            f"({len(config.pairings)} pairings x {config.games_per_pairing}), "
            f"engine={backend}, jobs={args.jobs}, seed={config.master_seed}"
        )

    start = time.perf_counter()
    last = [0.0]

    def progress(done, n):
        now = time.perf_counter()
        if not args.quiet and (now - last[0] > 5.0 or done == n):
            last[0] = now
            print(f"  {done}/{n} games ({now - start:.0f}s)", flush=True)

    traces = harness.run_experiment(
        config, jobs=args.jobs, engine_name=args.engine, progress=progress
    )
    n = write_traces(traces, args.out)
    if not args.quiet:
        print(f"wrote {n} traces to {args.out}")
    return 0


def _cmd_analyze(args) -> int:
    traces = read_traces(args.traces)
    selections = [s.strip() for s in args.report.split(",") if s.strip()]
    written = emit_reports(
        traces,
        selections,
        fmt=args.format,
        out_dir=args.out_dir,
        min_support=args.min_support,
    )
    for path in written:
        print(path)
    return 0


def _cmd_bench(args) -> int:
    if not engine.fast_available():
        print("compiled engine is not built; nothing to compare", file=sys.stderr)
        return 1
    config = harness.parse_config(
        {"domain": args.domain, "pairings": [[args.rollouts, args.rollouts]],
         "games_per_pairing": args.games, "master_seed": args.seed}
    )
    game = harness.build_game(config)
    results = {}
    for name in (engine.PURE, engine.FAST):
        runtime = engine.make_runtime(game, name)
        start = time.perf_counter()
        traces = [
            runtime.simulate(args.rollouts, args.rollouts, config.exploration_c,
                             config.depth_cap, config.master_seed, i)
            for i in range(args.games)
        ]
        elapsed = time.perf_counter() - start
        results[name] = (elapsed, traces)
        print(f"{name:>5}: {args.games} games in {elapsed:.2f}s "
              f"({args.games / elapsed:.2f} games/s)")
    if results[engine.PURE][1] != results[engine.FAST][1]:
        print("ERROR: engines disagree on traces", file=sys.stderr)
        return 1
    speedup = results[engine.PURE][0] / results[engine.FAST][0]
    print(f"speedup: {speedup:.1f}x (identical traces)")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "simulate":
            return _cmd_simulate(args)
        if args.command == "analyze":
            return _cmd_analyze(args)
        return _cmd_bench(args)
    except (ConfigError, ReportSelectionError, TraceFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
