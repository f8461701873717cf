"""Benchmark problems and per-representation GA plumbing.

A representation bundle wires one genotype family to the GA engine:
random initialization, the genotypic and quotient crossover variants,
mutation, and the distances used for the diversity columns. A problem
binds an instance file to a fitness function and names the representation
family it runs on.
"""

import math
import re
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import ConfigError
from . import graph as graph_mod
from .fsm import FsmTable, fsm_canonicalize, fsm_crossover, table_hamming
from .graph import AdjMatrix, graph_li_crossover, graph_li_distance, load_edge_list, matrix_hamming
from .grouping import KaryVector, kary_hamming, li_crossover, li_distance
from .sequence import edit_distance, homologous_crossover, load_corpus, infer_alphabet, stretched_hamming, unstretch, GAP
from .tour import breakpoints, load_tsp, reversal_crossover, tour_length

CROSSOVER_IDS = ("genotypic", "quotient", "quotient-heuristic")


@dataclass
class Representation:
    """Operator bundle the engine needs for one genotype family."""

    name: str
    new_genotype: Callable  # (rng) -> genotype
    crossover: Callable  # (p1, p2, rng) -> child
    mutate: Callable  # (g, rate, rng) -> genotype
    genotypic_distance: Callable
    quotient_distance: Optional[Callable]  # None: column stays empty


@dataclass
class Problem:
    """Fitness plus the representation bundle it runs on."""

    name: str
    representation: Representation
    fitness: Callable  # (genotype) -> float
    sense: str  # "min" | "max"


def _edge_arrays(instance: AdjMatrix) -> tuple[np.ndarray, np.ndarray]:
    edges = instance.edges()
    u = np.array([e[0] for e in edges], dtype=np.int64)
    v = np.array([e[1] for e in edges], dtype=np.int64)
    return u, v


def _partition_objective(g: KaryVector, u: np.ndarray, v: np.ndarray, lam: float) -> float:
    cut = int((g.labels[u] != g.labels[v]).sum()) if u.size else 0
    cap = math.ceil(g.n / g.k)
    sizes = np.bincount(g.labels - 1, minlength=g.k)
    excess = np.clip(sizes - cap, 0, None)
    return float(cut + lam * (excess**2).sum())


def fitness_partition(g: KaryVector, instance: AdjMatrix, lam: float = 2.0) -> float:
    """Cut-edge count plus a quadratic penalty for oversized groups.

    Groups larger than ceil(n/k) pay lam * (excess)^2 each; lam = 0 gives
    the pure min-cut objective.
    """
    if g.n != instance.n:
        raise ConfigError("instance", f"genotype has {g.n} nodes, instance {instance.n}")
    u, v = _edge_arrays(instance)
    return _partition_objective(g, u, v, lam)


def fitness_tsp(g, instance: np.ndarray) -> float:
    """Closed-tour length under the rounded Euclidean metric."""
    return float(tour_length(g, instance))


def fitness_onemax(g: np.ndarray) -> float:
    return float(g.sum())


def fitness_seqmatch(g: str, corpus: list[str]) -> float:
    """Total edit distance from the genotype to every corpus sequence."""
    return float(sum(edit_distance(g, s) for s in corpus))


def _mod_target(maxlen: int, modulo: int):
    # all binary strings of length 0..maxlen, grouped by length, with the
    # ones-count-mod-m class of each
    groups = []
    for L in range(maxlen + 1):
        if L == 0:
            symbols = np.zeros((1, 0), dtype=np.int64)
        else:
            codes = np.arange(1 << L)
            symbols = (codes[:, None] >> np.arange(L)[None, :]) & 1
        targets = symbols.sum(axis=1) % modulo
        groups.append((symbols, targets))
    return groups


def fitness_fsm_classifier(m: FsmTable, groups) -> float:
    """Misclassified string count over the precomputed training set."""
    errors = 0
    for symbols, targets in groups:
        states = np.full(symbols.shape[0], m.start, dtype=np.int64)
        for pos in range(symbols.shape[1]):
            states = m.delta[states, symbols[:, pos]]
        errors += int((m.outputs[states] != targets).sum())
    return float(errors)


def planted_partition_graph(
    n: int, k: int, p_intra: float, p_inter: float, seed: int
) -> AdjMatrix:
    """Random graph with k planted communities of (near) equal size.

    Nodes are split into contiguous blocks; edges inside a block appear
    with probability p_intra, edges across blocks with p_inter.
    """
    rng = np.random.default_rng(seed)
    comm = np.array([i * k // n for i in range(n)])
    bits = np.zeros((n, n), dtype=np.uint8)
    for i in range(n):
        for j in range(i + 1, n):
            p = p_intra if comm[i] == comm[j] else p_inter
            if rng.random() < p:
                bits[i, j] = bits[j, i] = 1
    return AdjMatrix(bits)


# --- representation bundles -------------------------------------------------


def _unsupported(cross_id: str, rep: str, hint: str):
    def op(p1, p2, rng):
        raise ConfigError("crossover", f"'{cross_id}' is not defined for {rep}: {hint}")

    return op


def _binary_rep(n: int, cross_id: str) -> Representation:
    def new(rng):
        return rng.integers(0, 2, size=n)

    def cx_uniform(p1, p2, rng):
        mask = rng.integers(0, 2, size=n).astype(bool)
        return np.where(mask, p2, p1)

    def mutate(g, rate, rng):
        mask = rng.random(n) < rate
        out = g.copy()
        out[mask] = rng.integers(0, 2, size=int(mask.sum()))
        return out

    if cross_id == "genotypic":
        cx = cx_uniform
    else:
        cx = _unsupported(cross_id, "binary strings", "no label redundancy to quotient out")
    return Representation(
        "binary", new, cx, mutate, lambda a, b: int((a != b).sum()), None
    )


def _kary_rep(n: int, k: int, cross_id: str) -> Representation:
    def new(rng):
        return KaryVector.random(n, k, rng)

    def cx_genotypic(p1, p2, rng):
        mask = rng.integers(0, 2, size=n).astype(bool)
        return KaryVector(np.where(mask, p2.labels, p1.labels), k)

    def mutate(g, rate, rng):
        mask = rng.random(n) < rate
        labels = g.labels.copy()
        labels[mask] = rng.integers(1, k + 1, size=int(mask.sum()))
        return KaryVector(labels, k)

    if cross_id == "genotypic":
        cx = cx_genotypic
    elif cross_id == "quotient":
        cx = li_crossover
    else:
        cx = _unsupported(cross_id, "groupings", "label normalization is exact and cheap; use 'quotient'")
    return Representation(f"kary{k}", new, cx, mutate, kary_hamming, li_distance)


def _graph_rep(n: int, cross_id: str) -> Representation:
    def new(rng):
        return AdjMatrix.random(n, 0.5, rng)

    def cx_genotypic(p1, p2, rng):
        iu = np.triu_indices(n, k=1)
        mask = rng.integers(0, 2, size=len(iu[0])).astype(bool)
        vals = np.where(mask, p2.bits[iu], p1.bits[iu])
        bits = np.zeros((n, n), dtype=np.uint8)
        bits[iu] = vals
        bits.T[iu] = vals
        return AdjMatrix(bits)

    def mutate(g, rate, rng):
        iu = np.triu_indices(n, k=1)
        flip = rng.random(len(iu[0])) < rate
        vals = g.bits[iu] ^ flip.astype(np.uint8)
        bits = np.zeros((n, n), dtype=np.uint8)
        bits[iu] = vals
        bits.T[iu] = vals
        return AdjMatrix(bits)

    if cross_id == "genotypic":
        cx = cx_genotypic
    elif cross_id == "quotient":
        cx = graph_li_crossover
    else:
        cx = lambda p1, p2, rng: graph_li_crossover(p1, p2, rng, mode="heuristic")
    quot = graph_li_distance if n <= graph_mod.EXACT_BOUND else None
    return Representation("graph", new, cx, mutate, matrix_hamming, quot)


def _seq_rep(alphabet: str, max_len: int, cross_id: str) -> Representation:
    letters = list(alphabet)

    def new(rng):
        L = int(rng.integers(0, max_len + 1))
        return "".join(rng.choice(letters) for _ in range(L))

    def cx_genotypic(p1, p2, rng):
        # leftmost alignment: pad the shorter with trailing gaps, then
        # uniform crossover column-wise and unstretch
        L = max(len(p1), len(p2))
        a = p1 + GAP * (L - len(p1))
        b = p2 + GAP * (L - len(p2))
        mask = rng.integers(0, 2, size=L)
        child = "".join(x if m == 0 else y for x, y, m in zip(a, b, mask))
        return unstretch(child)

    def mutate(g, rate, rng):
        if rng.random() >= rate:
            return g
        ops = ["insert"] if not g else ["insert", "delete", "replace"]
        op = ops[int(rng.integers(0, len(ops)))]
        if op == "insert":
            pos = int(rng.integers(0, len(g) + 1))
            return g[:pos] + letters[int(rng.integers(0, len(letters)))] + g[pos:]
        pos = int(rng.integers(0, len(g)))
        if op == "delete":
            return g[:pos] + g[pos + 1 :]
        return g[:pos] + letters[int(rng.integers(0, len(letters)))] + g[pos + 1 :]

    if cross_id == "genotypic":
        cx = cx_genotypic
    elif cross_id == "quotient":
        cx = homologous_crossover
    else:
        cx = _unsupported(cross_id, "sequences", "optimal alignment is exact polynomial; use 'quotient'")
    return Representation("seq", new, cx, mutate, stretched_hamming, edit_distance)


def _perm_rep(n: int, cross_id: str) -> Representation:
    def new(rng):
        return tuple(rng.permutation(n).tolist())

    def mutate(g, rate, rng):
        if rng.random() >= rate:
            return g
        i = int(rng.integers(0, n - 1))
        j = int(rng.integers(i + 1, n))
        return g[:i] + g[i : j + 1][::-1] + g[j + 1 :]

    if cross_id == "genotypic":
        cx = lambda p1, p2, rng: reversal_crossover(p1, p2, rng, mode="heuristic", normalize=False)
    elif cross_id == "quotient":
        cx = lambda p1, p2, rng: reversal_crossover(p1, p2, rng, mode="exact")
    else:
        cx = lambda p1, p2, rng: reversal_crossover(p1, p2, rng, mode="heuristic")
    # exact reversal distance is off the table at benchmark sizes; the
    # breakpoint count stands in as the genotypic diversity measure
    return Representation("perm", new, cx, mutate, breakpoints, None)


def _fsm_rep(n_states: int, n_outputs: int, cross_id: str) -> Representation:
    alphabet = 2

    def new(rng):
        return FsmTable.random(n_states, alphabet, n_outputs, rng)

    def cx_genotypic(p1, p2, rng):
        mask_d = rng.integers(0, 2, size=p1.delta.shape).astype(bool)
        mask_o = rng.integers(0, 2, size=p1.outputs.shape).astype(bool)
        delta = np.where(mask_d, p2.delta, p1.delta)
        outputs = np.where(mask_o, p2.outputs, p1.outputs)
        start = p2.start if rng.integers(0, 2) else p1.start
        return FsmTable(delta, outputs, start=int(start))

    def mutate(g, rate, rng):
        mask_d = rng.random(g.delta.shape) < rate
        delta = g.delta.copy()
        delta[mask_d] = rng.integers(0, n_states, size=int(mask_d.sum()))
        mask_o = rng.random(g.outputs.shape) < rate
        outputs = g.outputs.copy()
        outputs[mask_o] = rng.integers(0, n_outputs, size=int(mask_o.sum()))
        return FsmTable(delta, outputs, start=g.start)

    if cross_id == "genotypic":
        cx = cx_genotypic
    elif cross_id == "quotient":
        cx = fsm_crossover
    else:
        cx = _unsupported(cross_id, "FSM tables", "normal-form crossover already is the heuristic; use 'quotient'")

    def quot(a, b):
        return table_hamming(fsm_canonicalize(a), fsm_canonicalize(b))

    return Representation(f"fsm{n_states}", new, cx, mutate, table_hamming, quot)


# --- problem construction ---------------------------------------------------

_REP_PATTERNS = {
    "binary": re.compile(r"^binary$"),
    "kary": re.compile(r"^kary(\d+)$"),
    "graph": re.compile(r"^graph$"),
    "seq": re.compile(r"^seq$"),
    "perm": re.compile(r"^perm$"),
    "fsm": re.compile(r"^fsm(\d+)$"),
}

PROBLEM_IDS = ("onemax", "partition", "tsp", "seqmatch", "fsm_parity", "fsm_mod3")


def _rep_family(rep_id: str) -> tuple[str, Optional[int]]:
    for family, pat in _REP_PATTERNS.items():
        m = pat.match(rep_id)
        if m:
            return family, int(m.group(1)) if m.groups() else None
    raise ConfigError("representation", f"unknown representation id: {rep_id!r}")


def build_problem(problem_id: str, rep_id: str, cross_id: str, instance_path: str) -> Problem:
    """Load the instance and assemble the fitness/operator bundle."""
    if cross_id not in CROSSOVER_IDS:
        raise ConfigError("crossover", f"unknown crossover id: {cross_id!r}")
    family, param = _rep_family(rep_id)

    def need_instance():
        if not instance_path or instance_path == "-":
            raise ConfigError("instance", f"problem {problem_id!r} needs an instance file")

    if problem_id == "onemax":
        if family != "binary":
            raise ConfigError("representation", "onemax runs on 'binary'")
        need_instance()
        n = int(open(instance_path).read().split()[0])
        if n < 1:
            raise ConfigError("instance", "onemax length must be >= 1")
        rep = _binary_rep(n, cross_id)
        return Problem("onemax", rep, fitness_onemax, sense="max")

    if problem_id == "partition":
        if family != "kary":
            raise ConfigError("representation", "partition runs on 'kary<k>'")
        need_instance()
        inst = load_edge_list(instance_path)
        u, v = _edge_arrays(inst)
        rep = _kary_rep(inst.n, param, cross_id)
        return Problem(
            "partition", rep, lambda g: _partition_objective(g, u, v, 2.0), sense="min"
        )

    if problem_id == "tsp":
        if family != "perm":
            raise ConfigError("representation", "tsp runs on 'perm'")
        need_instance()
        coords = load_tsp(instance_path)
        rep = _perm_rep(len(coords), cross_id)
        return Problem("tsp", rep, lambda g: fitness_tsp(g, coords), sense="min")

    if problem_id == "seqmatch":
        if family != "seq":
            raise ConfigError("representation", "seqmatch runs on 'seq'")
        need_instance()
        corpus = load_corpus(instance_path)
        if not corpus:
            raise ConfigError("instance", "empty sequence corpus")
        alphabet = infer_alphabet(corpus)
        max_len = max(len(s) for s in corpus)
        rep = _seq_rep(alphabet, max_len, cross_id)
        return Problem("seqmatch", rep, lambda g: fitness_seqmatch(g, corpus), sense="min")

    if problem_id in ("fsm_parity", "fsm_mod3"):
        if family != "fsm":
            raise ConfigError("representation", f"{problem_id} runs on 'fsm<states>'")
        modulo = 2 if problem_id == "fsm_parity" else 3
        # training strings are truncated at twice the state budget
        groups = _mod_target(2 * param, modulo)
        rep = _fsm_rep(param, modulo, cross_id)
        return Problem(problem_id, rep, lambda m: fitness_fsm_classifier(m, groups), sense="min")

    raise ConfigError("problem", f"unknown problem id: {problem_id!r}")
