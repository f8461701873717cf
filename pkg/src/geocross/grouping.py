"""Grouping genotypes: fixed-length vectors over labels {1..k}.

A k-way grouping is naturally redundant: permuting the k labels leaves
the underlying partition unchanged. The labeling-independent distance LI
is the minimum Hamming distance over relabelings, computed exactly via a
maximum-weight assignment on the k-by-k label agreement matrix. The
quotient crossover relabels the second parent to agree with the first as
much as possible, then applies an ordinary vector crossover.
"""

from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Optional

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import CapacityError, RepresentationMismatch
from .metric import EXHAUSTIVE_LIMIT, hamming
from .quotient import EquivRelation

# below this label count the optimal relabeling is found by scanning all
# k! permutations (vectorized); above it by the assignment solver
_ENUM_MAX = 5
# cap on |active labels|! during lexicographic tie-break enumeration
_LEX_ENUM_MAX = 8


class KaryVector:
    """Fixed-length vector with entries in {1..k}."""

    __slots__ = ("labels", "k")

    def __init__(self, labels, k: int):
        arr = np.asarray(labels, dtype=np.int64)
        if arr.ndim != 1 or arr.size < 1:
            raise RepresentationMismatch("labels must be a non-empty 1-d vector")
        if k < 1:
            raise RepresentationMismatch("k must be >= 1")
        if arr.min() < 1 or arr.max() > k:
            raise RepresentationMismatch(f"labels must lie in 1..{k}")
        self.labels = arr
        self.k = k

    @property
    def n(self) -> int:
        return int(self.labels.size)

    @classmethod
    def random(cls, n: int, k: int, rng: np.random.Generator) -> "KaryVector":
        return cls(rng.integers(1, k + 1, size=n), k)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, KaryVector)
            and self.k == other.k
            and self.labels.shape == other.labels.shape
            and bool((self.labels == other.labels).all())
        )

    def __hash__(self) -> int:
        return hash((self.k, self.labels.tobytes()))

    def __repr__(self) -> str:
        return f"KaryVector({self.labels.tolist()}, k={self.k})"


def _check_dims(a: KaryVector, b: KaryVector) -> None:
    if a.k != b.k or a.n != b.n:
        raise RepresentationMismatch(
            f"grouping vectors disagree: n={a.n},k={a.k} vs n={b.n},k={b.k}"
        )


def relabel(a: KaryVector, sigma: Iterable[int]) -> KaryVector:
    """Apply a label permutation: entry v becomes sigma[v-1].

    ``sigma`` must be a bijection on {1..k} written as a target list.
    """
    sig = np.asarray(list(sigma), dtype=np.int64)
    if sig.size != a.k or sorted(sig.tolist()) != list(range(1, a.k + 1)):
        raise RepresentationMismatch(f"sigma is not a permutation of 1..{a.k}")
    return KaryVector(sig[a.labels - 1], a.k)


def agreement_matrix(a: KaryVector, b: KaryVector) -> np.ndarray:
    """C[i, j] = number of positions where a holds label i+1 and b holds j+1."""
    _check_dims(a, b)
    k = a.k
    flat = (a.labels - 1) * k + (b.labels - 1)
    return np.bincount(flat, minlength=k * k).reshape(k, k)


@lru_cache(maxsize=None)
def _perm_table(k: int) -> np.ndarray:
    # all permutations of 0..k-1 in lexicographic order
    return np.array(list(permutations(range(k))), dtype=np.int64)


def li_distance(a: KaryVector, b: KaryVector) -> int:
    """Labeling-independent distance: min over relabelings of Hamming.

    Equals n minus the maximum-weight perfect matching on the agreement
    matrix; one-sided relabeling suffices because relabeling both parents
    by the same permutation preserves Hamming distance.
    """
    C = agreement_matrix(a, b)
    k = a.k
    if k <= _ENUM_MAX:
        perms = _perm_table(k)
        scores = C[perms, np.arange(k)].sum(axis=1)
        best = int(scores.max())
    else:
        rows, cols = linear_sum_assignment(C, maximize=True)
        best = int(C[rows, cols].sum())
    return a.n - best


def _active_labels(C: np.ndarray) -> np.ndarray:
    present_row = C.sum(axis=1) > 0
    present_col = C.sum(axis=0) > 0
    return np.flatnonzero(present_row | present_col)


def _best_assignment_value(C: np.ndarray) -> int:
    rows, cols = linear_sum_assignment(C, maximize=True)
    return int(C[rows, cols].sum())


def _lex_min_optimal_sigma(C: np.ndarray) -> np.ndarray:
    """Optimal relabeling sigma (0-based target per source label),
    lexicographically smallest among co-optimal ones, with labels absent
    from both vectors pinned to themselves."""
    k = C.shape[0]
    active = _active_labels(C)
    sigma = np.arange(k)
    if active.size == 0:
        return sigma
    sub = C[np.ix_(active, active)]  # rows: targets, cols: sources
    m = active.size
    if m <= _LEX_ENUM_MAX:
        perms = _perm_table(m)
        scores = sub[perms, np.arange(m)].sum(axis=1)
        choice = perms[int(np.argmax(scores))]  # first max = lex smallest
    else:
        # fix targets column by column, keeping the overall optimum reachable
        opt = _best_assignment_value(sub)
        remaining = list(range(m))
        choice = np.empty(m, dtype=np.int64)
        fixed_score = 0
        for col in range(m):
            for t in sorted(remaining):
                rest_rows = [r for r in remaining if r != t]
                rest = sub[np.ix_(rest_rows, range(col + 1, m))]
                score = fixed_score + int(sub[t, col])
                if rest.size:
                    score += _best_assignment_value(rest)
                if score == opt:
                    choice[col] = t
                    fixed_score += int(sub[t, col])
                    remaining.remove(t)
                    break
            else:
                raise AssertionError("no optimal completion found")
    sigma[active] = active[choice]
    return sigma


def li_normalize(p1: KaryVector, p2: KaryVector) -> KaryVector:
    """Relabel p2 so its Hamming distance to p1 equals LI(p1, p2).

    Deterministic: among co-optimal relabelings the lexicographically
    smallest is used, and labels absent from both parents stay fixed.
    """
    C = agreement_matrix(p1, p2)
    sigma0 = _lex_min_optimal_sigma(C)  # 0-based: source j -> target sigma0[j]
    return relabel(p2, (sigma0 + 1).tolist())


def li_crossover(
    p1: KaryVector,
    p2: KaryVector,
    rng: np.random.Generator,
    method: str = "uniform",
) -> KaryVector:
    """Normalize p2 to p1, then cross the aligned pair.

    Offspring lie on the quotient segment between the parents' classes
    under LI. ``method`` is "uniform" (per-locus fair coin, default) or
    "one_point".
    """
    _check_dims(p1, p2)
    q = li_normalize(p1, p2)
    if method == "uniform":
        mask = rng.integers(0, 2, size=p1.n).astype(bool)
        child = np.where(mask, q.labels, p1.labels)
    elif method == "one_point":
        cut = int(rng.integers(0, p1.n + 1))
        child = np.concatenate([p1.labels[:cut], q.labels[cut:]])
    else:
        raise ValueError(f"unknown crossover method: {method}")
    return KaryVector(child, p1.k)


def canonical_form(a: KaryVector) -> KaryVector:
    """Relabel by first-appearance order; equal canonical forms mean the
    two vectors encode the same partition."""
    mapping: dict[int, int] = {}
    out = np.empty(a.n, dtype=np.int64)
    nxt = 1
    for idx, v in enumerate(a.labels.tolist()):
        if v not in mapping:
            mapping[v] = nxt
            nxt += 1
        out[idx] = mapping[v]
    return KaryVector(out, a.k)


def relabeling_relation(k: int) -> EquivRelation:
    """Label-permutation relation on k-ary vectors."""

    def same_class(a: KaryVector, b: KaryVector) -> bool:
        if a.k != k or b.k != k or a.n != b.n:
            return False
        return canonical_form(a) == canonical_form(b)

    def class_members(a: KaryVector) -> list[KaryVector]:
        seen = set()
        out = []
        for perm in permutations(range(1, k + 1)):
            v = relabel(a, perm)
            key = v.labels.tobytes()
            if key not in seen:
                seen.add(key)
                out.append(v)
        return out

    return EquivRelation(same_class, class_members, name=f"label permutations (k={k})")


def kary_hamming(a: KaryVector, b: KaryVector) -> int:
    _check_dims(a, b)
    return hamming(a.labels, b.labels)


def enumerate_kary(k: int, n: int) -> list[KaryVector]:
    """All k-ary vectors of length n, lexicographic."""
    count = k**n
    if count > EXHAUSTIVE_LIMIT:
        raise CapacityError(f"{count} vectors exceed the exhaustive limit", EXHAUSTIVE_LIMIT)
    return [KaryVector(list(p), k) for p in product(range(1, k + 1), repeat=n)]
