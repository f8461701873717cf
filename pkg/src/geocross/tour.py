"""Tours as circular permutations: reversal distance and sorting crossover.

A tour visits each of n cities once and is stored as a linear permutation
of 0..n-1; all n rotations of that permutation describe the same tour.
The working metric is the reversal distance (minimum number of
contiguous-segment reversals, the 2-opt move). Exact values come from
breadth-first search and are only feasible for small n; at benchmark
scale the breakpoint count supplies a cheap lower bound and greedy
breakpoint sorting an upper bound. Normalizing a parent means rotating it
to agree with the other parent as much as possible before the sorting
crossover walks part of a sorting trajectory between them.
"""

from collections import deque
from functools import lru_cache
from math import ceil, dist
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import CapacityError, RepresentationMismatch
from .quotient import EquivRelation

EXACT_BOUND = 8  # largest n for exact (BFS) reversal distances

Perm = tuple


def _check_perm(p) -> tuple:
    t = tuple(int(v) for v in p)
    if sorted(t) != list(range(len(t))):
        raise RepresentationMismatch(f"not a permutation of 0..{len(t) - 1}: {t}")
    return t


def _check_pair(a, b) -> tuple[tuple, tuple]:
    a = _check_perm(a)
    b = _check_perm(b)
    if len(a) != len(b):
        raise RepresentationMismatch(f"permutation sizes disagree: {len(a)} vs {len(b)}")
    return a, b


def apply_reversal(p: tuple, i: int, j: int) -> tuple:
    """Reverse the segment at positions i..j inclusive."""
    return p[:i] + p[i : j + 1][::-1] + p[j + 1 :]


def invert(p: tuple) -> tuple:
    inv = [0] * len(p)
    for pos, v in enumerate(p):
        inv[v] = pos
    return tuple(inv)


def compose(p: tuple, q: tuple) -> tuple:
    """(p o q)[t] = p[q[t]]."""
    return tuple(p[v] for v in q)


def _relative(a: tuple, b: tuple) -> tuple:
    # q with rd(a, b) == rd(identity, q): position of each b-element in a
    return compose(invert(a), b)


@lru_cache(maxsize=8)
def _distance_table(n: int) -> dict:
    """BFS distances from the identity over the reversal graph of S_n.

    Reversal distance is left-invariant, so rd(a, b) is the table entry
    of a^-1 o b. Cached per n; n=8 costs a few seconds once.
    """
    if n > EXACT_BOUND:
        raise CapacityError(f"exact reversal distance needs n <= {EXACT_BOUND}, got {n}", EXACT_BOUND)
    ident = tuple(range(n))
    table = {ident: 0}
    frontier = deque([ident])
    moves = [(i, j) for i in range(n) for j in range(i + 1, n)]
    while frontier:
        cur = frontier.popleft()
        d = table[cur] + 1
        for i, j in moves:
            nxt = apply_reversal(cur, i, j)
            if nxt not in table:
                table[nxt] = d
                frontier.append(nxt)
    return table


def breakpoints(a, b) -> int:
    """Number of adjacencies of a (frame included) broken in b.

    Computed on the relative permutation with frame elements -1 and n;
    a pair of neighbors is intact when the values differ by exactly 1.
    """
    a, b = _check_pair(a, b)
    q = _relative(a, b)
    return _breakpoints_of(q)


def _breakpoints_of(q: tuple) -> int:
    n = len(q)
    ext = (-1,) + q + (n,)
    return sum(1 for t in range(n + 1) if abs(ext[t + 1] - ext[t]) != 1)


def _greedy_trajectory(q: tuple, rng: Optional[np.random.Generator]) -> list[tuple]:
    """Breakpoint-greedy sorting of q to the identity; returns the state
    sequence including both endpoints.

    When no reversal removes a breakpoint, the leftmost increasing strip
    of length >= 2 is flipped (such a strip exists then), which enables a
    removing reversal next step. A positional-placement fallback bounds
    the walk defensively.
    """
    n = len(q)
    ident = tuple(range(n))
    traj = [q]
    cur = q
    hard_cap = 2 * _breakpoints_of(q) + n + 2
    while cur != ident:
        if len(traj) > hard_cap:
            # place the smallest out-of-position value; always terminates
            t = next(t for t in range(n) if cur[t] != t)
            j = cur.index(t)
            cur = apply_reversal(cur, t, j)
            traj.append(cur)
            continue
        bp = _breakpoints_of(cur)
        best_delta = 0
        best_moves = []
        for i in range(n):
            for j in range(i + 1, n):
                delta = _breakpoints_of(apply_reversal(cur, i, j)) - bp
                if delta < best_delta:
                    best_delta = delta
                    best_moves = [(i, j)]
                elif delta == best_delta and delta < 0:
                    best_moves.append((i, j))
        if best_moves:
            if rng is None:
                i, j = best_moves[0]
            else:
                i, j = best_moves[int(rng.integers(0, len(best_moves)))]
            cur = apply_reversal(cur, i, j)
        else:
            # flip the leftmost increasing strip of length >= 2
            flipped = False
            for t in range(n - 1):
                if cur[t + 1] == cur[t] + 1:
                    end = t + 1
                    while end + 1 < n and cur[end + 1] == cur[end] + 1:
                        end += 1
                    cur = apply_reversal(cur, t, end)
                    flipped = True
                    break
            if not flipped:
                t = next(t for t in range(n) if cur[t] != t)
                j = cur.index(t)
                cur = apply_reversal(cur, t, j)
        traj.append(cur)
    return traj


def reversal_distance(a, b, mode: str = "exact", *, exact_bound: int = EXACT_BOUND):
    """Reversal distance between two linear permutations.

    Exact mode returns the BFS distance (n <= exact_bound). Mode
    "breakpoint_bound" returns the interval (lower, upper): lower is
    ceil(breakpoints / 2) -- one reversal repairs at most two breakpoints
    -- and upper the length of a greedy breakpoint-sorting trajectory.
    """
    a, b = _check_pair(a, b)
    q = _relative(a, b)
    if mode == "exact":
        if len(a) > exact_bound:
            raise CapacityError(f"exact reversal distance needs n <= {exact_bound}", exact_bound)
        return _distance_table(len(a))[q]
    if mode == "breakpoint_bound":
        lower = ceil(_breakpoints_of(q) / 2)
        upper = len(_greedy_trajectory(q, None)) - 1
        return (lower, upper)
    raise ValueError(f"unknown mode: {mode}")


def rotations(p) -> list[tuple]:
    """All n rotations of a permutation (shift s moves position s to the front)."""
    p = _check_perm(p)
    n = len(p)
    return [p[s:] + p[:s] for s in range(n)]


def canonical_rotation(p) -> tuple:
    """The rotation that starts with city 0: the canonical tour representative."""
    p = _check_perm(p)
    s = p.index(0)
    return p[s:] + p[:s]


def circ_normalize(p1, p2) -> tuple:
    """Rotation of p2 that matches p1 as much as possible.

    Picks the rotation with the fewest breakpoints against p1; ties fall
    to smaller Hamming distance, then to the smaller shift index.
    """
    p1, p2 = _check_pair(p1, p2)
    best = None
    for shift, cand in enumerate(rotations(p2)):
        bp = breakpoints(p1, cand)
        ham = sum(x != y for x, y in zip(p1, cand))
        key = (bp, ham, shift)
        if best is None or key < best[0]:
            best = (key, cand)
    return best[1]


def circ_reversal_distance(
    a, b, *, exact_bound: int = EXACT_BOUND, include_reflection: bool = False
) -> int:
    """Quotient reversal distance between tours: the minimum exact reversal
    distance over all rotation pairs of the two representatives.

    Tour equivalence is rotation only by default; pass
    ``include_reflection`` to also quotient out the traversal direction.
    """
    a, b = _check_pair(a, b)
    if len(a) > exact_bound:
        raise CapacityError(f"exact tour distance needs n <= {exact_bound}", exact_bound)
    table = _distance_table(len(a))
    members_b = rotations(b)
    if include_reflection:
        members_b = members_b + rotations(b[::-1])
    return min(
        table[_relative(ra, rb)]
        for ra in rotations(a)
        for rb in members_b
    )


def rotation_relation(n: int, include_reflection: bool = False) -> EquivRelation:
    """Rotation relation on linear permutations (same circular tour).

    With ``include_reflection`` the class also contains the reversed
    traversals, a further quotient that is off by default.
    """

    def members(p) -> list[tuple]:
        out = rotations(p)
        if include_reflection:
            for r in rotations(tuple(reversed(p))):
                if r not in out:
                    out.append(r)
        return out

    def same_class(a, b) -> bool:
        a, b = _check_pair(a, b)
        if canonical_rotation(a) == canonical_rotation(b):
            return True
        if include_reflection:
            return canonical_rotation(a) == canonical_rotation(tuple(reversed(b)))
        return False

    name = "rotations+reflection" if include_reflection else "rotations"
    return EquivRelation(same_class, members, name=f"{name} (n={n})")


def reversal_crossover(
    p1,
    p2,
    rng: np.random.Generator,
    mode: str = "exact",
    *,
    exact_bound: int = EXACT_BOUND,
    normalize: bool = True,
) -> tuple:
    """Sorting-by-reversals crossover for tours.

    The second parent is rotation-normalized to the first (skipped when
    ``normalize`` is false, giving the plain genotypic sorting crossover),
    then the operator walks a sorting trajectory from p1 toward it and
    stops after a uniformly drawn number of steps. Exact mode steps only
    through reversals that shrink the exact BFS distance by one, so every
    offspring z satisfies rd(p1,z) + rd(z,p2') = rd(p1,p2') with p2' the
    normalized parent; heuristic mode follows breakpoint-greedy steps.
    """
    p1, p2 = _check_pair(p1, p2)
    n = len(p1)
    p2n = circ_normalize(p1, p2) if normalize else p2
    if mode == "exact":
        if n > exact_bound:
            raise CapacityError(f"exact crossover needs n <= {exact_bound}", exact_bound)
        table = _distance_table(n)
        total = table[_relative(p1, p2n)]
        steps = int(rng.integers(0, total + 1))
        cur = p1
        remaining = total
        for _ in range(steps):
            cands = []
            for i in range(n):
                for j in range(i + 1, n):
                    nxt = apply_reversal(cur, i, j)
                    if table[_relative(nxt, p2n)] == remaining - 1:
                        cands.append(nxt)
            cur = cands[int(rng.integers(0, len(cands)))]
            remaining -= 1
        return cur
    if mode == "heuristic":
        # sorting r = p2n^-1 o p1 to the identity mirrors walking p1 to p2n:
        # the same reversal applies to both, and cur = p2n o r
        r0 = _relative(p2n, p1)
        traj = _greedy_trajectory(r0, rng)
        steps = int(rng.integers(0, len(traj)))
        return compose(p2n, traj[steps])
    raise ValueError(f"unknown mode: {mode}")


def tour_length(p, coords: np.ndarray) -> int:
    """Closed-tour length under the rounded Euclidean metric.

    Each edge length is rounded half-up to the nearest integer before
    summing, TSPLIB-style, so lengths are reproducible integers.
    """
    p = _check_perm(p)
    if len(p) != len(coords):
        raise RepresentationMismatch(f"tour visits {len(p)} cities, instance has {len(coords)}")
    total = 0
    for t in range(len(p)):
        a = coords[p[t]]
        b = coords[p[(t + 1) % len(p)]]
        total += int(dist(a, b) + 0.5)
    return total


def load_tsp(path) -> np.ndarray:
    """Coordinates file: first line n, then n lines "x y"."""
    tokens = Path(path).read_text().split()
    if not tokens:
        raise RepresentationMismatch("empty TSP instance")
    n = int(tokens[0])
    if len(tokens) != 1 + 2 * n:
        raise RepresentationMismatch(f"expected {n} coordinate pairs")
    vals = [float(t) for t in tokens[1:]]
    return np.array(vals, dtype=np.float64).reshape(n, 2)
