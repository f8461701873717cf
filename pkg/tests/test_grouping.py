from itertools import permutations

import numpy as np
import pytest

from geocross import (
    KaryVector,
    RepresentationMismatch,
    check_geometricity,
    check_metric_axioms,
    li_crossover,
    li_distance,
    li_normalize,
)
from geocross.grouping import (
    canonical_form,
    enumerate_kary,
    kary_hamming,
    relabel,
    relabeling_relation,
)
from geocross.quotient import quotient_distance_bruteforce


def _kv(*labels, k):
    return KaryVector(list(labels), k)


def _brute_li(a: KaryVector, b: KaryVector) -> int:
    # one-sided relabeling scan, independent of the assignment machinery
    best = None
    for sig in permutations(range(1, b.k + 1)):
        h = sum(x != sig[y - 1] for x, y in zip(a.labels.tolist(), b.labels.tolist()))
        if best is None or h < best:
            best = h
    return best


def test_relabel_and_validation():
    a = _kv(1, 2, 3, k=3)
    assert relabel(a, (3, 1, 2)) == _kv(3, 1, 2, k=3)
    with pytest.raises(RepresentationMismatch):
        relabel(a, (1, 1, 2))
    with pytest.raises(RepresentationMismatch):
        KaryVector([0, 1], 2)
    with pytest.raises(RepresentationMismatch):
        li_distance(_kv(1, 2, k=2), _kv(1, 2, 1, k=2))


def test_li_distance_examples():
    a = _kv(1, 1, 2, 2, 3, k=3)
    assert li_distance(a, a) == 0
    b = _kv(3, 3, 1, 1, 2, k=3)
    assert li_distance(a, b) == 0
    assert li_distance(_kv(1, 1, 2, k=2), _kv(1, 2, 2, k=2)) == 1


def test_li_matches_bruteforce_over_relabelings():
    rng = np.random.default_rng(23)
    for k in (2, 3, 4):
        for n in (3, 5, 7):
            for _ in range(40):
                a = KaryVector.random(n, k, rng)
                b = KaryVector.random(n, k, rng)
                assert li_distance(a, b) == _brute_li(a, b)


def test_li_matches_quotient_bruteforce():
    rng = np.random.default_rng(29)
    for k in (2, 3, 4):
        rel = relabeling_relation(k)
        for n in (3, 5, 7):
            for _ in range(15):
                a = KaryVector.random(n, k, rng)
                b = KaryVector.random(n, k, rng)
                assert li_distance(a, b) == quotient_distance_bruteforce(a, b, kary_hamming, rel)


def test_single_sided_minimization_suffices():
    # min over (sigma, sigma') equals min over sigma alone
    rng = np.random.default_rng(31)
    for k in (2, 3):
        for n in (3, 4, 6):
            for _ in range(20):
                a = KaryVector.random(n, k, rng)
                b = KaryVector.random(n, k, rng)
                two_sided = min(
                    sum(
                        sa[x - 1] != sb[y - 1]
                        for x, y in zip(a.labels.tolist(), b.labels.tolist())
                    )
                    for sa in permutations(range(1, k + 1))
                    for sb in permutations(range(1, k + 1))
                )
                assert two_sided == _brute_li(a, b) == li_distance(a, b)


def test_li_normalize_examples():
    p1 = _kv(1, 1, 2, 2, k=2)
    p2 = _kv(2, 2, 1, 1, k=2)
    assert li_normalize(p1, p2) == p1
    assert li_normalize(p1, p1) == p1
    assert li_normalize(_kv(1, 2, 3, k=3), _kv(3, 1, 2, k=3)) == _kv(1, 2, 3, k=3)


def test_li_normalize_attains_distance_and_stays_in_class():
    rng = np.random.default_rng(37)
    for k in (2, 3, 4):
        rel = relabeling_relation(k)
        for _ in range(60):
            p1 = KaryVector.random(6, k, rng)
            p2 = KaryVector.random(6, k, rng)
            q = li_normalize(p1, p2)
            assert kary_hamming(p1, q) == li_distance(p1, p2)
            assert rel.same_class(q, p2)


def test_li_normalize_lexicographic_and_absent_labels():
    # label 2 appears in neither parent: it must stay fixed
    p1 = _kv(1, 1, 1, k=3)
    p2 = _kv(3, 3, 3, k=3)
    q = li_normalize(p1, p2)
    assert q == _kv(1, 1, 1, k=3)
    # sigma maps 3->1; absent label 2 stays put, so 1->3 closes the cycle
    assert relabel(p2, (3, 2, 1)) == q


def test_li_is_metric_on_classes_exhaustive():
    for k, n in ((2, 4), (2, 5), (3, 4)):
        pts = enumerate_kary(k, n)
        rel = relabeling_relation(k)
        report = check_metric_axioms(pts, li_distance, equiv=rel.same_class)
        assert report.ok, f"k={k} n={n}: {report.summary()}"


def test_li_crossover_trivial_cases():
    rng = np.random.default_rng(41)
    p1 = _kv(1, 1, 2, 2, k=2)
    assert li_crossover(p1, p1, rng) == p1
    # normalized second parent coincides with first: child always equals p1
    p2 = _kv(2, 2, 1, 1, k=2)
    for _ in range(20):
        assert li_crossover(p1, p2, rng) == p1


def test_li_crossover_one_point():
    rng = np.random.default_rng(43)
    p1 = _kv(1, 1, 1, 1, k=2)
    p2 = _kv(2, 2, 2, 2, k=2)
    for _ in range(20):
        child = li_crossover(p1, p2, rng, method="one_point")
        s = "".join(map(str, child.labels.tolist()))
        # one-point children of normalized pair are prefix/suffix mixes
        assert s in {"1111", "2222", "1222", "1122", "1112"} | {"2111", "2211", "2221"}


def test_li_crossover_geometric_under_li():
    rng = np.random.default_rng(47)
    pairs = [
        (KaryVector.random(8, 3, rng), KaryVector.random(8, 3, rng)) for _ in range(300)
    ]
    report = check_geometricity(li_crossover, li_distance, pairs, trials_per_pair=3)
    assert report.violation_rate == 0.0, report.summary()


def test_canonical_form_groups_equal_partitions():
    a = _kv(2, 2, 1, 3, k=3)
    b = _kv(1, 1, 3, 2, k=3)
    assert canonical_form(a) == canonical_form(b)
    c = _kv(1, 2, 3, 1, k=3)
    assert canonical_form(a) != canonical_form(c)
