from itertools import permutations, product

import numpy as np
import pytest

from geocross import (
    FsmTable,
    RepresentationMismatch,
    fsm_canonicalize,
    fsm_crossover,
    table_hamming,
)
from geocross.fsm import (
    classification_signature,
    classify,
    relabel_states,
    state_relabeling_relation,
)


def _machine(delta, outputs, start=0):
    return FsmTable(delta, outputs, start)


def test_validation():
    with pytest.raises(RepresentationMismatch):
        FsmTable([[2, 0], [0, 1]], [0, 1])  # target out of range
    with pytest.raises(RepresentationMismatch):
        FsmTable([[0, 0], [0, 1]], [0, 1], start=5)
    with pytest.raises(RepresentationMismatch):
        table_hamming(
            _machine([[0, 0]], [0]), _machine([[0, 0], [1, 1]], [0, 1])
        )


def test_classify_parity_machine():
    # two states tracking the parity of ones
    m = _machine([[0, 1], [1, 0]], [0, 1])
    assert classify(m, []) == 0
    assert classify(m, [1]) == 1
    assert classify(m, [1, 0, 1]) == 0
    assert classify(m, [1, 1, 1]) == 1


def test_canonicalize_idempotent():
    rng = np.random.default_rng(3)
    for _ in range(40):
        m = FsmTable.random(4, 2, 2, rng)
        c = fsm_canonicalize(m)
        assert fsm_canonicalize(c) == c
        assert c.start == 0


def test_canonicalize_invariant_under_relabeling_when_reachable():
    rng = np.random.default_rng(5)
    checked = 0
    for _ in range(200):
        m = FsmTable.random(3, 2, 2, rng)
        sig = classification_signature(m, 2 * m.n_states)
        # keep only machines whose states are all reachable
        reach = {m.start}
        frontier = [m.start]
        while frontier:
            s = frontier.pop()
            for c in range(m.alphabet_size):
                t = int(m.delta[s, c])
                if t not in reach:
                    reach.add(t)
                    frontier.append(t)
        if len(reach) != m.n_states:
            continue
        checked += 1
        canon = fsm_canonicalize(m)
        for p in permutations(range(m.n_states)):
            assert fsm_canonicalize(relabel_states(m, p)) == canon
        assert classification_signature(canon, 2 * m.n_states) == sig
    assert checked >= 20


def test_canonicalize_preserves_classification_with_unreachable_states():
    rng = np.random.default_rng(7)
    for _ in range(60):
        m = FsmTable.random(4, 2, 3, rng)
        c = fsm_canonicalize(m)
        assert classification_signature(m, 2 * m.n_states) == classification_signature(
            c, 2 * m.n_states
        )


def test_relabel_states_preserves_classification():
    rng = np.random.default_rng(9)
    for _ in range(30):
        m = FsmTable.random(4, 2, 2, rng)
        p = tuple(rng.permutation(4).tolist())
        r = relabel_states(m, p)
        assert classification_signature(m, 6) == classification_signature(r, 6)


def test_crossover_identical_parents():
    rng = np.random.default_rng(11)
    m = FsmTable.random(3, 2, 2, rng)
    child = fsm_crossover(m, m, rng)
    assert child == fsm_canonicalize(m)


def test_crossover_isomorphic_reachable_parents():
    rng = np.random.default_rng(13)
    found = 0
    while found < 10:
        m = FsmTable.random(3, 2, 2, rng)
        reach = {0}
        frontier = [0]
        while frontier:
            s = frontier.pop()
            for c in range(2):
                t = int(m.delta[s, c])
                if t not in reach:
                    reach.add(t)
                    frontier.append(t)
        if len(reach) != 3:
            continue
        found += 1
        p = tuple(rng.permutation(3).tolist())
        other = relabel_states(m, p)
        child = fsm_crossover(m, other, rng)
        assert child == fsm_canonicalize(m)


def test_crossover_segment_identity_under_table_hamming():
    rng = np.random.default_rng(17)
    for _ in range(200):
        p1 = FsmTable.random(3, 2, 2, rng)
        p2 = FsmTable.random(3, 2, 2, rng)
        a = fsm_canonicalize(p1)
        b = fsm_canonicalize(p2)
        child = fsm_crossover(p1, p2, rng)
        assert table_hamming(a, child) + table_hamming(child, b) == table_hamming(a, b)


def test_crossover_child_always_valid():
    rng = np.random.default_rng(19)
    for _ in range(50):
        p1 = FsmTable.random(4, 3, 2, rng)
        p2 = FsmTable.random(4, 3, 2, rng)
        child = fsm_crossover(p1, p2, rng)
        assert child.delta.min() >= 0 and child.delta.max() < 4
        assert child.start == 0


def test_state_relabeling_relation_members():
    rng = np.random.default_rng(23)
    m = FsmTable.random(3, 2, 2, rng)
    rel = state_relabeling_relation(3)
    members = rel.class_members(m)
    assert m in members
    assert all(rel.same_class(m, x) for x in members)
    sig = classification_signature(m, 6)
    assert all(classification_signature(x, 6) == sig for x in members)
