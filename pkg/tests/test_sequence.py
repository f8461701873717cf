import numpy as np
import pytest

from geocross import (
    align,
    check_geometricity,
    check_metric_axioms,
    edit_distance,
    homologous_crossover,
    stretched_hamming,
)
from geocross.errors import RepresentationMismatch
from geocross.sequence import (
    GAP,
    all_sequences,
    all_stretchings,
    infer_alphabet,
    load_corpus,
    stretching_relation,
    unstretch,
)


def _slow_edit(s1: str, s2: str) -> int:
    # plain quadratic DP, kept deliberately naive
    n1, n2 = len(s1), len(s2)
    D = [[0] * (n2 + 1) for _ in range(n1 + 1)]
    for i in range(n1 + 1):
        D[i][0] = i
    for j in range(n2 + 1):
        D[0][j] = j
    for i in range(1, n1 + 1):
        for j in range(1, n2 + 1):
            cost = 0 if s1[i - 1] == s2[j - 1] else 1
            D[i][j] = min(D[i - 1][j - 1] + cost, D[i - 1][j] + 1, D[i][j - 1] + 1)
    return D[n1][n2]


def _min_over_stretchings(s1: str, s2: str) -> int:
    # pad every stretching to the common maximal length; trailing gaps
    # are themselves stretchings, so this covers all shorter ones too
    L = len(s1) + len(s2)
    best = None
    for a in all_stretchings(s1, L):
        for b in all_stretchings(s2, L):
            h = sum(x != y for x, y in zip(a, b))
            if best is None or h < best:
                best = h
    return best


def test_edit_distance_examples():
    assert edit_distance("agcacaca", "acacacta") == 2
    assert edit_distance("banana", "banana") == 0
    assert edit_distance("", "abc") == 3
    assert edit_distance("abc", "") == 3


def test_edit_distance_matches_naive_dp():
    rng = np.random.default_rng(3)
    for _ in range(100):
        s1 = "".join(rng.choice(list("acgt"), rng.integers(0, 10)))
        s2 = "".join(rng.choice(list("acgt"), rng.integers(0, 10)))
        assert edit_distance(s1, s2) == _slow_edit(s1, s2)


def test_edit_distance_rejects_gaps():
    with pytest.raises(RepresentationMismatch):
        edit_distance("a-b", "ab")


def test_edit_equals_min_over_stretchings_exhaustive():
    seqs = all_sequences("ab", 4)
    for s1 in seqs:
        for s2 in seqs:
            assert edit_distance(s1, s2) == _min_over_stretchings(s1, s2)


def test_edit_distance_axioms_exhaustive():
    pts = all_sequences("ab", 3)
    report = check_metric_axioms(pts, edit_distance)
    assert report.ok, report.summary()


def test_align_paper_pair():
    a1, a2 = align("agcacaca", "acacacta")
    assert unstretch(a1) == "agcacaca" and unstretch(a2) == "acacacta"
    assert len(a1) == len(a2)
    assert sum(x != y for x, y in zip(a1, a2)) == 2
    assert not any(x == GAP and y == GAP for x, y in zip(a1, a2))
    # the known optimal alignment is reachable by some traceback
    optimal = set()
    rng = np.random.default_rng(5)
    for _ in range(300):
        optimal.add(align("agcacaca", "acacacta", policy="sampled", rng=rng))
    assert ("agcacac-a", "a-cacacta") in optimal


def test_align_trivial_cases():
    assert align("abc", "abc") == ("abc", "abc")
    assert align("", "ab") == ("--", "ab")
    assert align("ab", "") == ("ab", "--")


def test_align_sampled_always_optimal():
    rng = np.random.default_rng(7)
    for _ in range(60):
        s1 = "".join(rng.choice(list("ab"), rng.integers(0, 7)))
        s2 = "".join(rng.choice(list("ab"), rng.integers(0, 7)))
        d = edit_distance(s1, s2)
        for policy in ("deterministic", "sampled"):
            a1, a2 = align(s1, s2, policy=policy, rng=rng)
            assert unstretch(a1) == s1 and unstretch(a2) == s2
            assert sum(x != y for x, y in zip(a1, a2)) == d
            assert not any(x == GAP and y == GAP for x, y in zip(a1, a2))


def test_stretched_hamming_examples():
    assert stretched_hamming("ab-", "ab-") == 0
    # surplus tail counts as all-different
    assert stretched_hamming("abc", "ab") == 1
    assert stretched_hamming("a-b", "ab-") == 2


def test_unstretch_roundtrip():
    rng = np.random.default_rng(11)
    for _ in range(50):
        s = "".join(rng.choice(list("acgt"), rng.integers(0, 8)))
        L = len(s) + int(rng.integers(0, 4))
        for stretched in all_stretchings(s, L)[:10]:
            assert unstretch(stretched) == s


def test_homologous_crossover_trivial():
    rng = np.random.default_rng(13)
    assert homologous_crossover("abc", "abc", rng) == "abc"


def test_homologous_crossover_empty_parent():
    rng = np.random.default_rng(17)
    seen = set()
    for _ in range(100):
        z = homologous_crossover("", "ab", rng)
        seen.add(z)
        assert edit_distance("", z) + edit_distance(z, "ab") == 2
    assert seen == {"", "a", "b", "ab"}


def test_homologous_crossover_geometric_on_paper_pair():
    rng = np.random.default_rng(19)
    p1, p2 = "agcacaca", "acacacta"
    d = edit_distance(p1, p2)
    assert d == 2
    for _ in range(200):
        z = homologous_crossover(p1, p2, rng)
        assert edit_distance(p1, z) + edit_distance(z, p2) == d


def test_homologous_crossover_geometric_random():
    rng = np.random.default_rng(23)

    def rand_seq():
        return "".join(rng.choice(list("acgt"), rng.integers(0, 13)))

    pairs = [(rand_seq(), rand_seq()) for _ in range(300)]
    report = check_geometricity(homologous_crossover, edit_distance, pairs, trials_per_pair=3)
    assert report.violation_rate == 0.0, report.summary()


def test_stretching_relation_members():
    rel = stretching_relation(4)
    members = rel.class_members("ab")
    assert "ab" in members and "a-b" in members and "--ab" in members
    assert all(unstretch(m) == "ab" for m in members)
    assert rel.same_class("a-b", "ab-") and not rel.same_class("ab", "ba")


def test_corpus_loader(tmp_path):
    f = tmp_path / "corpus.txt"
    f.write_text("acgt\n\nttga\n")
    seqs = load_corpus(f)
    assert seqs == ["acgt", "ttga"]
    assert infer_alphabet(seqs) == "acgt"
