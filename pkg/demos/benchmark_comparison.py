"""Genotypic vs quotient crossover on a planted partition instance.

Builds a graph with four planted communities, then runs the same GA twice
per seed: once with naive uniform crossover on raw labels, once with
label normalization first. Only the crossover differs; everything else,
including every random stream, is pinned by the seed.

A smaller replica count than the acceptance benchmark keeps this demo
quick; bump SEEDS/GENERATIONS for the full picture.
"""

import statistics
import tempfile
from pathlib import Path

from geocross.graph import write_edge_list
from geocross.harness import RunConfig, run_ga
from geocross.problems import planted_partition_graph

SEEDS = 8
GENERATIONS = 80

with tempfile.TemporaryDirectory() as td:
    instance = Path(td) / "planted.txt"
    write_edge_list(planted_partition_graph(32, 4, 0.7, 0.1, seed=2024), instance)

    results = {}
    for crossover in ("genotypic", "quotient"):
        finals = []
        for s in range(SEEDS):
            cfg = RunConfig(
                problem="partition",
                representation="kary4",
                crossover=crossover,
                population=60,
                generations=GENERATIONS,
                tournament_size=3,
                crossover_rate=1.0,
                mutation_rate=0.02,
                seed=100 + s,
                instance=str(instance),
                output=str(Path(td) / f"{crossover}.csv"),
            )
            finals.append(run_ga(cfg).final_best)
        results[crossover] = finals
        print(f"{crossover:10s} finals: {finals}  median {statistics.median(finals)}")

    print(
        "\nquotient median <= genotypic median:",
        statistics.median(results["quotient"]) <= statistics.median(results["genotypic"]),
    )
    print("(direction only; run the acceptance suite for the pinned comparison)")
