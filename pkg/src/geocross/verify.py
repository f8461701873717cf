"""Oracle property suites behind ``geocross verify``.

Each suite replays the library's core guarantees at desk scale: exact
specialized distances against the brute-force quotient oracle, metric
axioms on exhaustively enumerated spaces, and offspring-on-segment checks
for every crossover. A suite returns (name, ok, detail) triples; the CLI
prints one line per check and exits nonzero when anything fails.
"""

from itertools import permutations

import numpy as np

from .metric import (
    all_strings,
    check_geometricity,
    check_metric_axioms,
    hamming,
    uniform_crossover,
)
from .quotient import quotient_distance_bruteforce
from .grouping import (
    KaryVector,
    enumerate_kary,
    kary_hamming,
    li_crossover,
    li_distance,
    li_normalize,
    relabeling_relation,
)
from .graph import (
    AdjMatrix,
    count_unlabeled_graphs,
    enumerate_graphs,
    graph_li_crossover,
    graph_li_distance,
    isomorphic,
    matrix_hamming,
    relabeling_relation as graph_relation,
)
from .sequence import (
    all_sequences,
    all_stretchings,
    edit_distance,
    homologous_crossover,
    stretched_hamming,
    unstretch,
)
from .tour import (
    circ_normalize,
    circ_reversal_distance,
    reversal_crossover,
    reversal_distance,
    rotation_relation,
)
from .fsm import (
    FsmTable,
    classification_signature,
    fsm_canonicalize,
    fsm_crossover,
    relabel_states,
    table_hamming,
)

Check = tuple[str, bool, str]


def _result(name: str, ok: bool, detail: str = "") -> Check:
    return (name, ok, detail)


def suite_metric() -> list[Check]:
    out = []
    pts = all_strings("01", 3)
    rep = check_metric_axioms(pts, hamming)
    out.append(_result("hamming axioms on 3-bit strings (exhaustive)", rep.ok, rep.summary()))

    rng = np.random.default_rng(1)
    pairs = [
        ("".join(rng.choice(list("01"), 6)), "".join(rng.choice(list("01"), 6)))
        for _ in range(100)
    ]
    g = check_geometricity(uniform_crossover, hamming, pairs, trials_per_pair=20)
    out.append(_result("uniform crossover geometric under hamming", g.ok, g.summary()))

    def random_genotype(x, y, r):
        return "".join("01"[b] for b in r.integers(0, 2, size=len(x)))

    neg = check_geometricity(random_genotype, hamming, pairs, trials_per_pair=20)
    out.append(
        _result(
            "negative control detected (parent-ignoring operator)",
            neg.violation_rate > 0.05,
            neg.summary(),
        )
    )
    return out


def suite_quotient() -> list[Check]:
    out = []
    rel = relabeling_relation(2)
    pts = enumerate_kary(2, 4)
    from .quotient import QuotientDistance

    qd = QuotientDistance(kary_hamming, rel)
    rep = check_metric_axioms(pts, qd, equiv=rel.same_class)
    out.append(_result("brute-force quotient distance is a metric (k=2, n=4)", rep.ok, rep.summary()))

    rng = np.random.default_rng(2)
    ok = True
    for _ in range(60):
        p1 = KaryVector.random(5, 3, rng)
        p2 = KaryVector.random(5, 3, rng)
        from .quotient import normalize

        q = normalize(p1, p2, kary_hamming, relabeling_relation(3))
        if kary_hamming(p1, q) != quotient_distance_bruteforce(
            p1, p2, kary_hamming, relabeling_relation(3)
        ):
            ok = False
            break
    out.append(_result("generic normalize attains the quotient distance", ok))
    return out


def suite_grouping() -> list[Check]:
    out = []
    rng = np.random.default_rng(3)
    ok = True
    for k in (2, 3, 4):
        rel = relabeling_relation(k)
        for n in (3, 5, 7):
            for _ in range(30):
                a = KaryVector.random(n, k, rng)
                b = KaryVector.random(n, k, rng)
                if li_distance(a, b) != quotient_distance_bruteforce(a, b, kary_hamming, rel):
                    ok = False
    out.append(_result("li_distance equals brute force over k! relabelings", ok))

    ok = True
    for _ in range(100):
        a = KaryVector.random(6, 3, rng)
        b = KaryVector.random(6, 3, rng)
        if kary_hamming(a, li_normalize(a, b)) != li_distance(a, b):
            ok = False
    out.append(_result("li_normalize attains LI", ok))

    pts = enumerate_kary(3, 4)
    rel = relabeling_relation(3)
    rep = check_metric_axioms(pts, li_distance, equiv=rel.same_class)
    out.append(_result("LI metric axioms (k=3, n=4, exhaustive)", rep.ok, rep.summary()))

    pairs = [(KaryVector.random(8, 3, rng), KaryVector.random(8, 3, rng)) for _ in range(200)]
    g = check_geometricity(li_crossover, li_distance, pairs, trials_per_pair=3)
    out.append(_result("li_crossover geometric under LI", g.ok, g.summary()))
    return out


def suite_graph() -> list[Check]:
    out = []
    rng = np.random.default_rng(4)
    ok = True
    for n in (3, 4, 5):
        rel = graph_relation(n)
        for _ in range(10):
            A = AdjMatrix.random(n, 0.5, rng)
            B = AdjMatrix.random(n, 0.5, rng)
            if graph_li_distance(A, B) != quotient_distance_bruteforce(A, B, matrix_hamming, rel):
                ok = False
    out.append(_result("exact graph LI equals brute force over n! relabelings", ok))

    ok = True
    gap_seen = 0
    for _ in range(30):
        A = AdjMatrix.random(6, 0.5, rng)
        B = AdjMatrix.random(6, 0.5, rng)
        h = graph_li_distance(A, B, mode="heuristic")
        e = graph_li_distance(A, B)
        if h < e:
            ok = False
        gap_seen += h - e
    out.append(_result("heuristic >= exact", ok, f"total gap over 30 pairs: {gap_seen}"))

    census = (count_unlabeled_graphs(3), count_unlabeled_graphs(4))
    out.append(
        _result("unlabeled census: 4 classes (n=3), 11 classes (n=4)", census == (4, 11), str(census))
    )

    pts = enumerate_graphs(3)
    rep = check_metric_axioms(pts, graph_li_distance, equiv=isomorphic)
    out.append(_result("graph LI metric axioms (n=3, exhaustive)", rep.ok, rep.summary()))

    pairs = [(AdjMatrix.random(5, 0.5, rng), AdjMatrix.random(5, 0.5, rng)) for _ in range(50)]
    g = check_geometricity(graph_li_crossover, graph_li_distance, pairs, trials_per_pair=2)
    out.append(_result("exact graph crossover geometric under LI", g.ok, g.summary()))
    return out


def suite_sequence() -> list[Check]:
    out = []
    seqs = all_sequences("ab", 3)
    ok = True
    for s1 in seqs:
        for s2 in seqs:
            L = len(s1) + len(s2)
            best = min(
                stretched_hamming(a, b)
                for a in all_stretchings(s1, L)
                for b in all_stretchings(s2, L)
            )
            if best != edit_distance(s1, s2):
                ok = False
    out.append(_result("edit distance equals min over stretchings (len<=3)", ok))

    rep = check_metric_axioms(seqs, edit_distance)
    out.append(_result("edit distance metric axioms (len<=3, exhaustive)", rep.ok, rep.summary()))

    from .sequence import align

    a1, a2 = align("agcacaca", "acacacta")
    ok = (
        unstretch(a1) == "agcacaca"
        and unstretch(a2) == "acacacta"
        and sum(x != y for x, y in zip(a1, a2)) == edit_distance("agcacaca", "acacacta") == 2
    )
    out.append(_result("alignment of the reference pair is optimal (2 mismatches)", ok, f"{a1} / {a2}"))

    rng = np.random.default_rng(5)

    def rand_seq():
        return "".join(rng.choice(list("acgt"), rng.integers(0, 13)))

    pairs = [(rand_seq(), rand_seq()) for _ in range(200)]
    g = check_geometricity(homologous_crossover, edit_distance, pairs, trials_per_pair=3)
    out.append(_result("homologous crossover geometric under edit distance", g.ok, g.summary()))
    return out


def suite_tour() -> list[Check]:
    out = []
    rng = np.random.default_rng(6)
    rel = rotation_relation(4)
    ok = True
    for _ in range(30):
        a = tuple(rng.permutation(4).tolist())
        b = tuple(rng.permutation(4).tolist())
        if circ_reversal_distance(a, b) != quotient_distance_bruteforce(a, b, reversal_distance, rel):
            ok = False
    out.append(_result("tour quotient distance equals brute force (n=4)", ok))

    pts = [tuple(p) for p in permutations(range(4))]
    rep = check_metric_axioms(pts, reversal_distance)
    out.append(_result("reversal distance metric axioms (n=4, exhaustive)", rep.ok, rep.summary()))

    ok = True
    for _ in range(40):
        n = int(rng.integers(4, 8))
        a = tuple(rng.permutation(n).tolist())
        b = tuple(rng.permutation(n).tolist())
        lo, hi = reversal_distance(a, b, mode="breakpoint_bound")
        if not (lo <= reversal_distance(a, b) <= hi):
            ok = False
    out.append(_result("breakpoint bound brackets the exact distance", ok))

    pairs = []
    for _ in range(60):
        n = int(rng.integers(4, 8))
        p1 = tuple(rng.permutation(n).tolist())
        p2 = tuple(rng.permutation(n).tolist())
        pairs.append((p1, circ_normalize(p1, p2)))
    g = check_geometricity(reversal_crossover, reversal_distance, pairs, trials_per_pair=2)
    out.append(_result("exact sorting crossover geometric under reversal distance", g.ok, g.summary()))

    # heuristic mode: interval-compatibility rate is reported, not asserted
    compatible = 0
    trials = 30
    for _ in range(trials):
        p1 = tuple(rng.permutation(16).tolist())
        p2 = tuple(rng.permutation(16).tolist())
        z = reversal_crossover(p1, p2, rng, mode="heuristic")
        p2n = circ_normalize(p1, p2)
        lo1, hi1 = reversal_distance(p1, z, mode="breakpoint_bound")
        lo2, hi2 = reversal_distance(z, p2n, mode="breakpoint_bound")
        lo, hi = reversal_distance(p1, p2n, mode="breakpoint_bound")
        if lo1 + lo2 <= hi and lo <= hi1 + hi2:
            compatible += 1
    out.append(
        _result(
            "heuristic crossover interval compatibility (measured)",
            True,
            f"{compatible}/{trials} offspring interval-compatible",
        )
    )
    return out


def suite_fsm() -> list[Check]:
    out = []
    rng = np.random.default_rng(7)
    ok = True
    for _ in range(80):
        m = FsmTable.random(3, 2, 2, rng)
        c = fsm_canonicalize(m)
        if classification_signature(m, 6) != classification_signature(c, 6):
            ok = False
    out.append(_result("canonicalization preserves classification", ok))

    ok = True
    checked = 0
    for _ in range(120):
        m = FsmTable.random(3, 2, 2, rng)
        reach = {m.start}
        stack = [m.start]
        while stack:
            s = stack.pop()
            for ch in range(m.alphabet_size):
                t = int(m.delta[s, ch])
                if t not in reach:
                    reach.add(t)
                    stack.append(t)
        if len(reach) != m.n_states:
            continue
        checked += 1
        canon = fsm_canonicalize(m)
        for p in permutations(range(m.n_states)):
            if fsm_canonicalize(relabel_states(m, p)) != canon:
                ok = False
    out.append(
        _result("canonical form invariant under relabeling (reachable)", ok, f"{checked} machines")
    )

    ok = True
    for _ in range(150):
        p1 = FsmTable.random(3, 2, 2, rng)
        p2 = FsmTable.random(3, 2, 2, rng)
        a, b = fsm_canonicalize(p1), fsm_canonicalize(p2)
        child = fsm_crossover(p1, p2, rng)
        if table_hamming(a, child) + table_hamming(child, b) != table_hamming(a, b):
            ok = False
    out.append(_result("crossover on-segment under table hamming (post normal form)", ok))
    return out


SUITES = {
    "metric": suite_metric,
    "quotient": suite_quotient,
    "grouping": suite_grouping,
    "graph": suite_graph,
    "sequence": suite_sequence,
    "tour": suite_tour,
    "fsm": suite_fsm,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        results = []
        for suite_name in SUITES:
            for check_name, ok, detail in SUITES[suite_name]():
                results.append((f"{suite_name}: {check_name}", ok, detail))
        return results
    if name not in SUITES:
        raise KeyError(f"unknown suite: {name!r}")
    return SUITES[name]()
