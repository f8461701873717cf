"""Variable-length sequences, edit distance and homologous crossover.

Sequences are plain strings over a finite alphabet that excludes the gap
symbol '-'. A stretched sequence interleaves gaps; removing them recovers
the original. Aligning two sequences optimally produces a pair of equal
length stretched sequences whose Hamming distance equals the unit-cost
edit distance, and crossing the aligned pair column by column yields
offspring that sit exactly on the edit-distance segment between the
parents.
"""

from itertools import combinations, product
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import CapacityError, RepresentationMismatch
from .metric import EXHAUSTIVE_LIMIT
from .rng import randbelow

GAP = "-"


def _check_no_gap(s: str) -> None:
    if GAP in s:
        raise RepresentationMismatch("unstretched sequences must not contain gaps")


def unstretch(s: str) -> str:
    """Drop all gap symbols."""
    return s.replace(GAP, "")


def edit_distance(s1: str, s2: str) -> int:
    """Unit-cost Levenshtein distance (insert, delete, replace)."""
    _check_no_gap(s1)
    _check_no_gap(s2)
    n1, n2 = len(s1), len(s2)
    if n1 == 0 or n2 == 0:
        return n1 or n2
    b = np.frombuffer(s2.encode("utf-32-le"), dtype=np.uint32)
    prev = np.arange(n2 + 1, dtype=np.int64)
    steps = np.arange(n2 + 1, dtype=np.int64)
    for i, ch in enumerate(s1):
        cost = (b != ord(ch)).astype(np.int64)
        cur = np.empty(n2 + 1, dtype=np.int64)
        cur[0] = i + 1
        # without the left-to-right dependency...
        cur[1:] = np.minimum(prev[1:] + 1, prev[:-1] + cost)
        # ...then fold it in: cur[j] <= cur[i] + (j - i) for i < j
        cur = np.minimum.accumulate(cur - steps) + steps
        prev = cur
    return int(prev[-1])


def _dp_matrix(s1: str, s2: str) -> np.ndarray:
    n1, n2 = len(s1), len(s2)
    D = np.zeros((n1 + 1, n2 + 1), dtype=np.int64)
    D[0, :] = np.arange(n2 + 1)
    D[:, 0] = np.arange(n1 + 1)
    for i in range(1, n1 + 1):
        for j in range(1, n2 + 1):
            cost = 0 if s1[i - 1] == s2[j - 1] else 1
            D[i, j] = min(D[i - 1, j - 1] + cost, D[i - 1, j] + 1, D[i, j - 1] + 1)
    return D


def align(
    s1: str,
    s2: str,
    policy: str = "deterministic",
    rng: Optional[np.random.Generator] = None,
) -> tuple[str, str]:
    """Optimal global alignment as a pair of equal-length stretched sequences.

    The Hamming distance of the returned pair equals edit_distance(s1, s2)
    and no column holds two gaps. The deterministic policy tracebacks with
    the fixed preference match/substitute > delete > insert; the sampled
    policy draws uniformly from the set of optimal alignments (it counts
    optimal paths into each cell and samples the traceback accordingly).
    """
    _check_no_gap(s1)
    _check_no_gap(s2)
    D = _dp_matrix(s1, s2)
    n1, n2 = len(s1), len(s2)

    if policy == "sampled":
        if rng is None:
            raise ValueError("sampled policy needs an rng")
        # counts as Python ints: path counts overflow fixed-width types fast
        N = [[0] * (n2 + 1) for _ in range(n1 + 1)]
        N[0][0] = 1
        for i in range(n1 + 1):
            for j in range(n2 + 1):
                if i == 0 and j == 0:
                    continue
                total = 0
                if i > 0 and j > 0:
                    cost = 0 if s1[i - 1] == s2[j - 1] else 1
                    if D[i, j] == D[i - 1, j - 1] + cost:
                        total += N[i - 1][j - 1]
                if i > 0 and D[i, j] == D[i - 1, j] + 1:
                    total += N[i - 1][j]
                if j > 0 and D[i, j] == D[i, j - 1] + 1:
                    total += N[i][j - 1]
                N[i][j] = total
    elif policy != "deterministic":
        raise ValueError(f"unknown alignment policy: {policy}")

    out1: list[str] = []
    out2: list[str] = []
    i, j = n1, n2
    while i > 0 or j > 0:
        moves = []  # (count_weight, kind)
        if i > 0 and j > 0:
            cost = 0 if s1[i - 1] == s2[j - 1] else 1
            if D[i, j] == D[i - 1, j - 1] + cost:
                moves.append(("diag", N[i - 1][j - 1] if policy == "sampled" else 1))
        if i > 0 and D[i, j] == D[i - 1, j] + 1:
            moves.append(("up", N[i - 1][j] if policy == "sampled" else 1))
        if j > 0 and D[i, j] == D[i, j - 1] + 1:
            moves.append(("left", N[i][j - 1] if policy == "sampled" else 1))
        if policy == "deterministic":
            kind = moves[0][0]  # listing order is the preference order
        else:
            total = sum(w for _, w in moves)
            pick = randbelow(rng, total)
            acc = 0
            kind = moves[-1][0]
            for k, w in moves:
                acc += w
                if pick < acc:
                    kind = k
                    break
        if kind == "diag":
            out1.append(s1[i - 1])
            out2.append(s2[j - 1])
            i -= 1
            j -= 1
        elif kind == "up":
            out1.append(s1[i - 1])
            out2.append(GAP)
            i -= 1
        else:
            out1.append(GAP)
            out2.append(s2[j - 1])
            j -= 1
    return "".join(reversed(out1)), "".join(reversed(out2))


def stretched_hamming(a: str, b: str) -> int:
    """Hamming distance after leftmost alignment: the shorter sequence is
    padded with trailing gaps, and the surplus tail of the longer one
    counts as all-different."""
    if len(a) < len(b):
        a = a + GAP * (len(b) - len(a))
    elif len(b) < len(a):
        b = b + GAP * (len(a) - len(b))
    return sum(x != y for x, y in zip(a, b))


def homologous_crossover(
    p1: str,
    p2: str,
    rng: np.random.Generator,
    policy: str = "deterministic",
) -> str:
    """Align optimally, uniform-cross column-wise, unstretch the child.

    Offspring z always satisfies LD(p1,z) + LD(z,p2) = LD(p1,p2).
    """
    a1, a2 = align(p1, p2, policy=policy, rng=rng if policy == "sampled" else None)
    mask = rng.integers(0, 2, size=len(a1))
    child = "".join(x if m == 0 else y for x, y, m in zip(a1, a2, mask))
    return unstretch(child)


def all_stretchings(s: str, total_len: int) -> list[str]:
    """Every stretching of s to exactly total_len symbols."""
    gaps = total_len - len(s)
    if gaps < 0:
        raise ValueError("total_len shorter than the sequence")
    count = 1
    for t in range(gaps):
        count = count * (total_len - t) // (t + 1)
    if count > EXHAUSTIVE_LIMIT:
        raise CapacityError(f"{count} stretchings exceed the exhaustive limit", EXHAUSTIVE_LIMIT)
    out = []
    for gap_positions in combinations(range(total_len), gaps):
        gapset = set(gap_positions)
        chars = []
        it = iter(s)
        for pos in range(total_len):
            chars.append(GAP if pos in gapset else next(it))
        out.append("".join(chars))
    return out


def stretching_relation(max_len: int):
    """Relation on stretched sequences: same unstretched form. Classes are
    truncated to stretchings of at most max_len symbols so they stay finite."""
    from .quotient import EquivRelation

    def same_class(a: str, b: str) -> bool:
        return unstretch(a) == unstretch(b)

    def class_members(a: str) -> list[str]:
        core = unstretch(a)
        out = []
        for L in range(len(core), max_len + 1):
            out.extend(all_stretchings(core, L))
        return out

    return EquivRelation(same_class, class_members, name=f"stretchings (max_len={max_len})")


def all_sequences(alphabet: str, max_len: int) -> list[str]:
    """Every sequence of length 0..max_len over the alphabet."""
    total = sum(len(alphabet) ** L for L in range(max_len + 1))
    if total > EXHAUSTIVE_LIMIT:
        raise CapacityError(f"{total} sequences exceed the exhaustive limit", EXHAUSTIVE_LIMIT)
    out = [""]
    for L in range(1, max_len + 1):
        out.extend("".join(p) for p in product(alphabet, repeat=L))
    return out


def load_corpus(path) -> list[str]:
    """One sequence per line; blank lines are skipped."""
    lines = [ln.strip() for ln in Path(path).read_text().splitlines()]
    seqs = [ln for ln in lines if ln]
    for s in seqs:
        _check_no_gap(s)
    return seqs


def infer_alphabet(seqs) -> str:
    return "".join(sorted({c for s in seqs for c in s}))
