"""Deterministic finite state machines as transition tables.

A machine is a delta table (state x symbol -> state), one output label
per state, and a start state; it classifies an input string by the output
label of the state it halts in. State numbering is arbitrary, so machines
are put into a normal form -- states renumbered by breadth-first
discovery order from the start, edges explored in symbol order -- before
recombination. Crossover of canonicalized tables is plain cell-wise
uniform crossover and is geometric under table Hamming distance by
construction; the normal form is a cheap stand-in for the intractable
classifier quotient.
"""

from itertools import permutations, product
from typing import Iterable, Sequence

import numpy as np

from .errors import RepresentationMismatch
from .quotient import EquivRelation


class FsmTable:
    """Transition table of a deterministic machine with per-state outputs."""

    __slots__ = ("delta", "outputs", "start")

    def __init__(self, delta, outputs, start: int = 0):
        d = np.asarray(delta, dtype=np.int64)
        o = np.asarray(outputs, dtype=np.int64)
        if d.ndim != 2 or o.ndim != 1 or d.shape[0] != o.shape[0]:
            raise RepresentationMismatch("delta must be (states x alphabet), outputs per state")
        if d.shape[0] < 1 or d.shape[1] < 1:
            raise RepresentationMismatch("need at least one state and one symbol")
        if d.min() < 0 or d.max() >= d.shape[0]:
            raise RepresentationMismatch("delta entries must be valid state indices")
        if not (0 <= start < d.shape[0]):
            raise RepresentationMismatch(f"start state {start} out of range")
        self.delta = d
        self.outputs = o
        self.start = int(start)

    @property
    def n_states(self) -> int:
        return int(self.delta.shape[0])

    @property
    def alphabet_size(self) -> int:
        return int(self.delta.shape[1])

    @classmethod
    def random(
        cls, n_states: int, alphabet_size: int, n_outputs: int, rng: np.random.Generator
    ) -> "FsmTable":
        delta = rng.integers(0, n_states, size=(n_states, alphabet_size))
        outputs = rng.integers(0, n_outputs, size=n_states)
        return cls(delta, outputs, start=0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FsmTable)
            and self.start == other.start
            and self.delta.shape == other.delta.shape
            and bool((self.delta == other.delta).all())
            and bool((self.outputs == other.outputs).all())
        )

    def __hash__(self) -> int:
        return hash((self.start, self.delta.tobytes(), self.outputs.tobytes()))

    def __repr__(self) -> str:
        return (
            f"FsmTable(delta={self.delta.tolist()}, outputs={self.outputs.tolist()}, "
            f"start={self.start})"
        )


def _check_dims(a: FsmTable, b: FsmTable) -> None:
    if a.delta.shape != b.delta.shape:
        raise RepresentationMismatch(
            f"machine shapes disagree: {a.delta.shape} vs {b.delta.shape}"
        )


def classify(m: FsmTable, string: Iterable[int]) -> int:
    """Run the machine on a symbol sequence; the halting state's label."""
    state = m.start
    for sym in string:
        if not (0 <= sym < m.alphabet_size):
            raise RepresentationMismatch(f"symbol {sym} outside alphabet")
        state = int(m.delta[state, sym])
    return int(m.outputs[state])


def classification_signature(m: FsmTable, max_len: int) -> tuple:
    """Outputs on every string of length 0..max_len, in lexicographic order."""
    out = []
    for L in range(max_len + 1):
        for s in product(range(m.alphabet_size), repeat=L):
            out.append(classify(m, s))
    return tuple(out)


def fsm_canonicalize(m: FsmTable) -> FsmTable:
    """Renumber states by BFS discovery order from the start state.

    Edges are explored in symbol order, so the numbering depends only on
    the machine's structure, not on its incoming state labels; machines
    that differ by a relabeling of reachable states share one canonical
    form. Unreachable states keep their original relative order after the
    reachable ones, and classification behavior is untouched.
    """
    n = m.n_states
    order: list[int] = [m.start]
    seen = {m.start}
    head = 0
    while head < len(order):
        s = order[head]
        head += 1
        for c in range(m.alphabet_size):
            t = int(m.delta[s, c])
            if t not in seen:
                seen.add(t)
                order.append(t)
    order.extend(s for s in range(n) if s not in seen)
    # order[new] = old; relabel[old] = new
    relabel = np.empty(n, dtype=np.int64)
    relabel[order] = np.arange(n)
    delta = relabel[m.delta[order]]
    outputs = m.outputs[order]
    return FsmTable(delta, outputs, start=0)


def table_hamming(a: FsmTable, b: FsmTable) -> int:
    """Cell-wise disagreement: delta entries, output labels, start state."""
    _check_dims(a, b)
    return int((a.delta != b.delta).sum()) + int((a.outputs != b.outputs).sum()) + int(
        a.start != b.start
    )


def fsm_crossover(p1: FsmTable, p2: FsmTable, rng: np.random.Generator) -> FsmTable:
    """Canonicalize both parents, then uniform-cross the tables cell-wise.

    Cells are copied whole, so the child is a valid machine by
    construction; both canonical parents start at state 0, hence so does
    the child.
    """
    _check_dims(p1, p2)
    a = fsm_canonicalize(p1)
    b = fsm_canonicalize(p2)
    mask_d = rng.integers(0, 2, size=a.delta.shape).astype(bool)
    mask_o = rng.integers(0, 2, size=a.outputs.shape).astype(bool)
    delta = np.where(mask_d, b.delta, a.delta)
    outputs = np.where(mask_o, b.outputs, a.outputs)
    return FsmTable(delta, outputs, start=0)


def relabel_states(m: FsmTable, perm: Sequence[int]) -> FsmTable:
    """Renumber states: state s becomes perm[s]."""
    p = np.asarray(list(perm), dtype=np.int64)
    if p.size != m.n_states or sorted(p.tolist()) != list(range(m.n_states)):
        raise RepresentationMismatch(f"perm is not a permutation of 0..{m.n_states - 1}")
    inv = np.empty(m.n_states, dtype=np.int64)
    inv[p] = np.arange(m.n_states)
    delta = p[m.delta[inv]]
    outputs = m.outputs[inv]
    return FsmTable(delta, outputs, start=int(p[m.start]))


def state_relabeling_relation(n_states: int) -> EquivRelation:
    """State-permutation relation; intended for small test machines."""

    def same_class(a: FsmTable, b: FsmTable) -> bool:
        if a.delta.shape != b.delta.shape:
            return False
        return any(relabel_states(a, p) == b for p in permutations(range(n_states)))

    def class_members(m: FsmTable) -> list[FsmTable]:
        seen = set()
        out = []
        for p in permutations(range(n_states)):
            g = relabel_states(m, p)
            key = (g.start, g.delta.tobytes(), g.outputs.tobytes())
            if key not in seen:
                seen.add(key)
                out.append(g)
        return out

    return EquivRelation(same_class, class_members, name=f"state permutations (S={n_states})")
