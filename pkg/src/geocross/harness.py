"""Generational GA engine with a byte-reproducible output contract.

The engine is deliberately plain -- tournament selection, elitism of one,
per-locus mutation -- so that runs differ only in the crossover operator
under comparison. Every random draw comes from a counter-based stream
keyed by (seed, purpose, generation, individual), which makes a run a
pure function of its configuration: repeating it, or running replicas
concurrently, produces byte-identical CSV files.

The CSV ``ms`` column is written as 0 by default to keep that guarantee;
measured per-generation wall-clock times stay available on the in-memory
records and can be emitted with ``include_timing=True``.
"""

import statistics
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional

from .errors import ConfigError
from .problems import CROSSOVER_IDS, Problem, build_problem
from . import rng as _rng

CONFIG_KEYS = (
    "problem",
    "representation",
    "crossover",
    "population",
    "generations",
    "tournament_size",
    "crossover_rate",
    "mutation_rate",
    "seed",
    "instance",
    "output",
)

DIVERSITY_SAMPLE = 8
CSV_HEADER = "generation,best,mean,diversity_genotypic,diversity_quotient,ms"


@dataclass
class RunConfig:
    problem: str
    representation: str
    crossover: str
    population: int
    generations: int
    tournament_size: int
    crossover_rate: float
    mutation_rate: float
    seed: int
    instance: str
    output: str

    def validate(self) -> None:
        if self.population < 2:
            raise ConfigError("population", "must be >= 2")
        if self.generations < 1:
            raise ConfigError("generations", "must be >= 1")
        if self.tournament_size < 1:
            raise ConfigError("tournament_size", "must be >= 1")
        if not 0.0 <= self.crossover_rate <= 1.0:
            raise ConfigError("crossover_rate", "must lie in [0, 1]")
        if not 0.0 <= self.mutation_rate <= 1.0:
            raise ConfigError("mutation_rate", "must lie in [0, 1]")
        if self.seed < 0:
            raise ConfigError("seed", "must be >= 0")
        if self.crossover not in CROSSOVER_IDS:
            raise ConfigError("crossover", f"unknown crossover id: {self.crossover!r}")


@dataclass
class GenerationRow:
    generation: int
    best: float
    mean: float
    diversity_genotypic: float
    diversity_quotient: Optional[float]
    wall_ms: float


@dataclass
class RunRecord:
    config: RunConfig
    rows: list[GenerationRow] = field(default_factory=list)

    @property
    def final_best(self) -> float:
        return self.rows[-1].best


def parse_config(path) -> RunConfig:
    """Flat key-value config: one ``key = value`` per line.

    Exactly the RunConfig keys are accepted; unknown or missing keys are
    rejected. '#' starts a comment; ``instance = -`` means no instance.
    """
    values: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("config", f"line {lineno} is not 'key = value': {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in CONFIG_KEYS:
            raise ConfigError(key, "unknown key")
        if key in values:
            raise ConfigError(key, "duplicate key")
        values[key] = value
    for key in CONFIG_KEYS:
        if key not in values:
            raise ConfigError(key, "missing key")

    def to_int(key):
        try:
            return int(values[key])
        except ValueError:
            raise ConfigError(key, f"not an integer: {values[key]!r}")

    def to_float(key):
        try:
            return float(values[key])
        except ValueError:
            raise ConfigError(key, f"not a number: {values[key]!r}")

    cfg = RunConfig(
        problem=values["problem"],
        representation=values["representation"],
        crossover=values["crossover"],
        population=to_int("population"),
        generations=to_int("generations"),
        tournament_size=to_int("tournament_size"),
        crossover_rate=to_float("crossover_rate"),
        mutation_rate=to_float("mutation_rate"),
        seed=to_int("seed"),
        instance=values["instance"],
        output=values["output"],
    )
    cfg.validate()
    return cfg


def write_config(cfg: RunConfig, path) -> None:
    lines = [f"{key} = {getattr(cfg, key)}" for key in CONFIG_KEYS]
    Path(path).write_text("\n".join(lines) + "\n")


def _best_index(fits: list[float], sense: str) -> int:
    # ties go to the lowest index, keeping elitism deterministic
    if sense == "min":
        return min(range(len(fits)), key=lambda i: (fits[i], i))
    return min(range(len(fits)), key=lambda i: (-fits[i], i))


def _diversity(pop, dist) -> float:
    sample = pop[: min(DIVERSITY_SAMPLE, len(pop))]
    if len(sample) < 2:
        return 0.0
    total = 0
    count = 0
    for i in range(len(sample)):
        for j in range(i + 1, len(sample)):
            total += dist(sample[i], sample[j])
            count += 1
    return total / count


def run_ga(cfg: RunConfig, problem: Optional[Problem] = None) -> RunRecord:
    """Run one GA replica; the result is a pure function of the config."""
    cfg.validate()
    if problem is None:
        problem = build_problem(cfg.problem, cfg.representation, cfg.crossover, cfg.instance)
    rep = problem.representation
    P = cfg.population
    sense = problem.sense

    pop = [rep.new_genotype(_rng.stream(cfg.seed, _rng.INIT, 0, i)) for i in range(P)]
    record = RunRecord(config=cfg)
    t_prev = time.perf_counter()

    for gen in range(cfg.generations + 1):
        fits = [problem.fitness(g) for g in pop]
        best_i = _best_index(fits, sense)
        now = time.perf_counter()
        quot = _diversity(pop, rep.quotient_distance) if rep.quotient_distance else None
        record.rows.append(
            GenerationRow(
                generation=gen,
                best=float(fits[best_i]),
                mean=float(sum(fits) / len(fits)),
                diversity_genotypic=float(_diversity(pop, rep.genotypic_distance)),
                diversity_quotient=quot,
                wall_ms=(now - t_prev) * 1000.0,
            )
        )
        t_prev = now
        if gen == cfg.generations:
            break

        new_pop = [pop[best_i]]  # elitism of one
        for slot in range(1, P):
            rng = _rng.stream(cfg.seed, _rng.BREED, gen + 1, slot)

            def tournament():
                idx = rng.integers(0, P, size=cfg.tournament_size).tolist()
                if sense == "min":
                    return pop[min(idx, key=lambda i: (fits[i], i))]
                return pop[min(idx, key=lambda i: (-fits[i], i))]

            p1 = tournament()
            p2 = tournament()
            if rng.random() < cfg.crossover_rate:
                child = rep.crossover(p1, p2, rng)
            else:
                child = p1
            child = rep.mutate(child, cfg.mutation_rate, rng)
            new_pop.append(child)
        pop = new_pop
    return record


def _fmt(x: Optional[float]) -> str:
    if x is None:
        return ""
    return repr(float(x))


def write_csv(record: RunRecord, path, include_timing: bool = False) -> None:
    """Serialize a run; ms is zeroed unless timing is explicitly requested,
    so default output is byte-identical across repeated runs."""
    lines = [CSV_HEADER]
    for row in record.rows:
        ms = int(row.wall_ms) if include_timing else 0
        lines.append(
            f"{row.generation},{_fmt(row.best)},{_fmt(row.mean)},"
            f"{_fmt(row.diversity_genotypic)},{_fmt(row.diversity_quotient)},{ms}"
        )
    Path(path).write_text("\n".join(lines) + "\n")


def run_to_file(cfg: RunConfig) -> RunRecord:
    record = run_ga(cfg)
    write_csv(record, cfg.output)
    return record


def _replica_paths(output: str, seeds: list[int]) -> tuple[list[Path], Path]:
    base = Path(output)
    stem, suffix = base.stem, base.suffix or ".csv"
    per_seed = [base.with_name(f"{stem}_seed{s}{suffix}") for s in seeds]
    aggregate = base.with_name(f"{stem}_aggregate{suffix}")
    return per_seed, aggregate


def bench(cfg: RunConfig, n_seeds: int, max_workers: Optional[int] = None) -> list[RunRecord]:
    """Run n_seeds replicas (seeds cfg.seed .. cfg.seed+n_seeds-1)
    concurrently, write one CSV per replica plus an aggregate CSV with the
    per-generation median best across seeds."""
    if n_seeds < 1:
        raise ConfigError("seeds", "must be >= 1")
    seeds = [cfg.seed + i for i in range(n_seeds)]
    configs = [replace(cfg, seed=s) for s in seeds]
    with ThreadPoolExecutor(max_workers=max_workers or min(4, n_seeds)) as pool:
        records = list(pool.map(run_ga, configs))
    per_seed, aggregate = _replica_paths(cfg.output, seeds)
    for rec, path in zip(records, per_seed):
        write_csv(rec, path)
    lines = ["generation,median_best"]
    for g in range(cfg.generations + 1):
        med = statistics.median(rec.rows[g].best for rec in records)
        lines.append(f"{g},{_fmt(med)}")
    aggregate.write_text("\n".join(lines) + "\n")
    return records
