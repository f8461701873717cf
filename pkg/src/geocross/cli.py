"""Command-line entry point: run a GA, verify the operator properties, or
benchmark several seeded replicas."""

import argparse
import sys

from .errors import GeocrossError
from .harness import bench, parse_config, run_to_file
from .verify import SUITES, run_suite


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="geocross",
        description="Geometric and quotient crossover experiments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one GA replica from a config file")
    p_run.add_argument("--config", required=True, help="flat key-value config file")

    p_verify = sub.add_parser("verify", help="run oracle property suites")
    p_verify.add_argument(
        "--suite",
        required=True,
        choices=sorted(SUITES) + ["all"],
        help="which property suite to run",
    )

    p_bench = sub.add_parser("bench", help="run several seeded replicas and aggregate")
    p_bench.add_argument("--config", required=True)
    p_bench.add_argument("--seeds", type=int, required=True, help="number of replicas")
    p_bench.add_argument("--workers", type=int, default=None, help="thread pool size")

    args = parser.parse_args(argv)

    try:
        if args.command == "run":
            cfg = parse_config(args.config)
            record = run_to_file(cfg)
            print(f"run: {cfg.problem}/{cfg.crossover} seed={cfg.seed} -> {cfg.output}")
            print(f"final best: {record.final_best}")
            return 0

        if args.command == "verify":
            results = run_suite(args.suite)
            failures = 0
            for name, ok, detail in results:
                status = "PASS" if ok else "FAIL"
                line = f"[{status}] {name}"
                if detail:
                    line += f" ({detail})"
                print(line)
                failures += 0 if ok else 1
            print(f"{len(results) - failures}/{len(results)} checks passed")
            return 1 if failures else 0

        if args.command == "bench":
            cfg = parse_config(args.config)
            records = bench(cfg, args.seeds, max_workers=args.workers)
            finals = [r.final_best for r in records]
            print(f"bench: {cfg.problem}/{cfg.crossover} x{args.seeds} seeds -> {cfg.output}")
            print(f"final best per seed: {finals}")
            return 0
    except GeocrossError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
