"""Unlabeled-graph genotypes: symmetric 0/1 adjacency matrices.

Node labels are an artifact of the encoding, so two matrices related by a
node permutation describe the same graph. The labeling-independent graph
distance is the minimum Hamming distance between adjacency matrices over
relabelings of one side; it counts matrix cells, i.e. twice the edge edit
distance for undirected graphs. Exact matching is a depth-first branch
and bound seeded with a hill-climbing upper bound; the heuristic mode
returns that upper bound directly for sizes where exact search is off the
table.
"""

from functools import lru_cache
from itertools import permutations
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import CapacityError, RepresentationMismatch
from .metric import EXHAUSTIVE_LIMIT
from .quotient import EquivRelation

EXACT_BOUND = 8  # largest node count for exact matching
DEFAULT_RESTARTS = 5


class AdjMatrix:
    """Adjacency matrix of a simple undirected graph on nodes 0..n-1."""

    __slots__ = ("bits",)

    def __init__(self, bits):
        arr = np.asarray(bits, dtype=np.uint8)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise RepresentationMismatch("adjacency matrix must be square")
        if arr.max(initial=0) > 1:
            raise RepresentationMismatch("entries must be 0/1")
        if (arr != arr.T).any():
            raise RepresentationMismatch("matrix must be symmetric")
        if np.diag(arr).any():
            raise RepresentationMismatch("diagonal must be zero")
        self.bits = arr

    @property
    def n(self) -> int:
        return int(self.bits.shape[0])

    @classmethod
    def from_edges(cls, n: int, edges) -> "AdjMatrix":
        bits = np.zeros((n, n), dtype=np.uint8)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise RepresentationMismatch(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise RepresentationMismatch(f"self-loop at node {u}")
            if bits[u, v]:
                raise RepresentationMismatch(f"duplicate edge ({u},{v})")
            bits[u, v] = bits[v, u] = 1
        return cls(bits)

    @classmethod
    def random(cls, n: int, p: float, rng: np.random.Generator) -> "AdjMatrix":
        bits = np.zeros((n, n), dtype=np.uint8)
        iu = np.triu_indices(n, k=1)
        vals = (rng.random(len(iu[0])) < p).astype(np.uint8)
        bits[iu] = vals
        bits.T[iu] = vals
        return cls(bits)

    def edges(self) -> list[tuple[int, int]]:
        iu = np.triu_indices(self.n, k=1)
        mask = self.bits[iu] == 1
        return list(zip(iu[0][mask].tolist(), iu[1][mask].tolist()))

    def degree_sequence(self) -> np.ndarray:
        return self.bits.sum(axis=1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AdjMatrix)
            and self.n == other.n
            and bool((self.bits == other.bits).all())
        )

    def __hash__(self) -> int:
        return hash(self.bits.tobytes())

    def __repr__(self) -> str:
        return f"AdjMatrix(n={self.n}, edges={self.edges()})"


def _check_sizes(a: AdjMatrix, b: AdjMatrix) -> None:
    if a.n != b.n:
        raise RepresentationMismatch(f"graph sizes disagree: {a.n} vs {b.n}")


def relabel(a: AdjMatrix, perm) -> AdjMatrix:
    """Relabel nodes: node i becomes perm[i]. Result[perm[i], perm[j]] = a[i, j]."""
    p = np.asarray(list(perm), dtype=np.int64)
    if p.size != a.n or sorted(p.tolist()) != list(range(a.n)):
        raise RepresentationMismatch(f"perm is not a permutation of 0..{a.n - 1}")
    inv = np.empty(a.n, dtype=np.int64)
    inv[p] = np.arange(a.n)
    return AdjMatrix(a.bits[np.ix_(inv, inv)])


def matrix_hamming(a: AdjMatrix, b: AdjMatrix) -> int:
    """Cell-count disagreement between adjacency matrices."""
    _check_sizes(a, b)
    return int((a.bits != b.bits).sum())


def _match_order(b: AdjMatrix) -> list[int]:
    # high-degree nodes first: most constrained, prunes earlier
    deg = b.degree_sequence()
    return sorted(range(b.n), key=lambda i: (-int(deg[i]), i))


def _heuristic_match(
    A: AdjMatrix, B: AdjMatrix, restarts: int, rng: Optional[np.random.Generator]
) -> tuple[int, np.ndarray]:
    """Degree-seeded permutation plus best-improvement 2-swap hill climbing."""
    n = A.n
    bitsA = A.bits.astype(np.int16)
    bitsB = B.bits.astype(np.int16)

    def cost_of(p: np.ndarray) -> int:
        inv = np.empty(n, dtype=np.int64)
        inv[p] = np.arange(n)
        return int((bitsB[np.ix_(inv, inv)] != bitsA).sum())

    def climb(p: np.ndarray) -> tuple[int, np.ndarray]:
        p = p.copy()
        cost = cost_of(p)
        improved = True
        while improved:
            improved = False
            best_delta = 0
            best_swap = None
            for i in range(n):
                for j in range(i + 1, n):
                    p[i], p[j] = p[j], p[i]
                    c = cost_of(p)
                    p[i], p[j] = p[j], p[i]
                    if c - cost < best_delta:
                        best_delta = c - cost
                        best_swap = (i, j)
            if best_swap is not None:
                i, j = best_swap
                p[i], p[j] = p[j], p[i]
                cost += best_delta
                improved = True
        return cost, p

    # seed: sort both degree sequences and map rank to rank
    orderA = np.argsort(A.degree_sequence(), kind="stable")
    orderB = np.argsort(B.degree_sequence(), kind="stable")
    seed = np.empty(n, dtype=np.int64)
    seed[orderB] = orderA
    best_cost, best_perm = climb(seed)
    if rng is None:
        rng = np.random.default_rng(0)
    for _ in range(max(0, restarts - 1)):
        cost, perm = climb(rng.permutation(n))
        if cost < best_cost:
            best_cost, best_perm = cost, perm
    return best_cost, best_perm


def _exact_match(A: AdjMatrix, B: AdjMatrix, upper: tuple[int, np.ndarray]) -> tuple[int, np.ndarray]:
    """Branch-and-bound over node bijections, pruning on partial cost."""
    n = A.n
    bitsA = A.bits
    bitsB = B.bits
    order = _match_order(B)
    best_cost, best_perm = upper
    best_perm = best_perm.copy()
    used = [False] * n
    perm = np.empty(n, dtype=np.int64)

    def dfs(depth: int, cost: int) -> None:
        nonlocal best_cost, best_perm
        if cost >= best_cost:
            return
        if depth == n:
            best_cost = cost
            best_perm = perm.copy()
            return
        i = order[depth]
        for u in range(n):
            if used[u]:
                continue
            add = 0
            for d in range(depth):
                j = order[d]
                if bitsB[i, j] != bitsA[u, perm[j]]:
                    add += 2
                    if cost + add >= best_cost:
                        break
            if cost + add >= best_cost:
                continue
            used[u] = True
            perm[i] = u
            dfs(depth + 1, cost + add)
            used[u] = False

    dfs(0, 0)
    return best_cost, best_perm


def _match(
    A: AdjMatrix,
    B: AdjMatrix,
    mode: str,
    exact_bound: int,
    restarts: int,
    rng: Optional[np.random.Generator],
) -> tuple[int, np.ndarray]:
    _check_sizes(A, B)
    if mode == "exact":
        if A.n > exact_bound:
            raise CapacityError(f"exact matching needs n <= {exact_bound}, got {A.n}", exact_bound)
        upper = _heuristic_match(A, B, 1, None)
        return _exact_match(A, B, upper)
    if mode == "heuristic":
        return _heuristic_match(A, B, restarts, rng)
    raise ValueError(f"unknown mode: {mode}")


def graph_li_distance(
    A: AdjMatrix,
    B: AdjMatrix,
    mode: str = "exact",
    *,
    exact_bound: int = EXACT_BOUND,
    restarts: int = DEFAULT_RESTARTS,
    rng: Optional[np.random.Generator] = None,
) -> int:
    """Labeling-independent graph distance, in matrix cells.

    Exact mode minimizes over all relabelings of B (n <= exact_bound);
    heuristic mode returns an upper bound from hill climbing with
    ``restarts`` restarts (deterministic unless an rng is supplied).
    """
    cost, _ = _match(A, B, mode, exact_bound, restarts, rng)
    return cost


def edge_edit_distance(A: AdjMatrix, B: AdjMatrix, mode: str = "exact", **kw) -> int:
    """Edge-level view of the LI distance (cells / 2)."""
    return graph_li_distance(A, B, mode, **kw) // 2


def graph_match_normalize(
    p1: AdjMatrix,
    p2: AdjMatrix,
    mode: str = "exact",
    *,
    exact_bound: int = EXACT_BOUND,
    restarts: int = DEFAULT_RESTARTS,
    rng: Optional[np.random.Generator] = None,
) -> AdjMatrix:
    """Relabeling of p2 closest to p1 (exact) or heuristically close."""
    _, perm = _match(p1, p2, mode, exact_bound, restarts, rng)
    return relabel(p2, perm.tolist())


def graph_li_crossover(
    p1: AdjMatrix,
    p2: AdjMatrix,
    rng: np.random.Generator,
    mode: str = "exact",
    *,
    exact_bound: int = EXACT_BOUND,
    restarts: int = DEFAULT_RESTARTS,
) -> AdjMatrix:
    """Match p2 to p1, then uniform-cross the upper triangles.

    The mask is mirrored so the child stays a valid simple graph. In
    exact mode every offspring lies on the quotient segment under the
    graph LI distance.
    """
    q = graph_match_normalize(p1, p2, mode, exact_bound=exact_bound, restarts=restarts, rng=rng)
    n = p1.n
    iu = np.triu_indices(n, k=1)
    mask = rng.integers(0, 2, size=len(iu[0])).astype(bool)
    vals = np.where(mask, q.bits[iu], p1.bits[iu])
    child = np.zeros((n, n), dtype=np.uint8)
    child[iu] = vals
    child.T[iu] = vals
    return AdjMatrix(child)


@lru_cache(maxsize=None)
def _perms(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(permutations(range(n)))


def canonical_bytes(a: AdjMatrix) -> bytes:
    """Smallest upper-triangle byte string over all relabelings; equal
    canonical bytes mean isomorphic graphs. Exhaustive, so small n only."""
    if a.n > EXACT_BOUND:
        raise CapacityError(f"canonical form enumerates {a.n}! relabelings", EXACT_BOUND)
    iu = np.triu_indices(a.n, k=1)
    best = None
    for p in _perms(a.n):
        cand = relabel(a, p).bits[iu].tobytes()
        if best is None or cand < best:
            best = cand
    return best


def isomorphic(a: AdjMatrix, b: AdjMatrix) -> bool:
    if a.n != b.n:
        return False
    return canonical_bytes(a) == canonical_bytes(b)


def enumerate_graphs(n: int) -> list[AdjMatrix]:
    """All simple graphs on n labeled nodes."""
    m = n * (n - 1) // 2
    count = 1 << m
    if count > EXHAUSTIVE_LIMIT:
        raise CapacityError(f"{count} graphs exceed the exhaustive limit", EXHAUSTIVE_LIMIT)
    iu = np.triu_indices(n, k=1)
    out = []
    for code in range(count):
        bits = np.zeros((n, n), dtype=np.uint8)
        vals = np.array([(code >> t) & 1 for t in range(m)], dtype=np.uint8)
        bits[iu] = vals
        bits.T[iu] = vals
        out.append(AdjMatrix(bits))
    return out


def count_unlabeled_graphs(n: int) -> int:
    """Number of isomorphism classes of simple graphs on n nodes."""
    return len({canonical_bytes(g) for g in enumerate_graphs(n)})


def relabeling_relation(n: int) -> EquivRelation:
    """Node-permutation relation on adjacency matrices."""

    def same_class(a: AdjMatrix, b: AdjMatrix) -> bool:
        return isomorphic(a, b)

    def class_members(a: AdjMatrix) -> list[AdjMatrix]:
        seen = set()
        out = []
        for p in _perms(a.n):
            g = relabel(a, p)
            key = g.bits.tobytes()
            if key not in seen:
                seen.add(key)
                out.append(g)
        return out

    return EquivRelation(same_class, class_members, name=f"node permutations (n={n})")


def load_edge_list(path) -> AdjMatrix:
    """Read a graph from a whitespace-separated edge-list file.

    First line "n m", then m lines "u v" with 0-based node ids. The
    loader rejects self-loops and duplicate edges.
    """
    text = Path(path).read_text()
    tokens = text.split()
    if len(tokens) < 2:
        raise RepresentationMismatch("edge-list file needs a header 'n m'")
    n, m = int(tokens[0]), int(tokens[1])
    if len(tokens) != 2 + 2 * m:
        raise RepresentationMismatch(f"expected {m} edges, found {(len(tokens) - 2) // 2}")
    edges = [(int(tokens[2 + 2 * t]), int(tokens[3 + 2 * t])) for t in range(m)]
    return AdjMatrix.from_edges(n, edges)


def write_edge_list(a: AdjMatrix, path) -> None:
    edges = a.edges()
    lines = [f"{a.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    Path(path).write_text("\n".join(lines) + "\n")
