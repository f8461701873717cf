from itertools import permutations

import numpy as np
import pytest

from geocross import (
    CapacityError,
    EquivRelation,
    KaryVector,
    QuotientDistance,
    hamming,
    normalize,
    quotient_distance_bruteforce,
    quotient_segment_contains,
)
from geocross.grouping import enumerate_kary, kary_hamming, relabeling_relation
from geocross.quotient import check_equivalence_axioms


def _kv(*labels, k):
    return KaryVector(list(labels), k)


def _raw_min_over_relabelings(a: KaryVector, b: KaryVector) -> int:
    # independent oracle: scan both-sided relabelings explicitly
    best = None
    for sig_a in permutations(range(1, a.k + 1)):
        ra = [sig_a[v - 1] for v in a.labels.tolist()]
        for sig_b in permutations(range(1, b.k + 1)):
            rb = [sig_b[v - 1] for v in b.labels.tolist()]
            h = sum(x != y for x, y in zip(ra, rb))
            if best is None or h < best:
                best = h
    return best


def test_bruteforce_same_class_is_zero():
    rel = relabeling_relation(2)
    a = _kv(1, 1, 2, 2, k=2)
    b = _kv(2, 2, 1, 1, k=2)
    assert rel.same_class(a, b)
    assert quotient_distance_bruteforce(a, b, kary_hamming, rel) == 0


def test_bruteforce_examples():
    rel = relabeling_relation(2)
    a = _kv(1, 1, 2, 2, k=2)
    b = _kv(2, 2, 1, 1, k=2)
    assert quotient_distance_bruteforce(a, b, kary_hamming, rel) == 0
    a = _kv(1, 1, 2, k=2)
    b = _kv(1, 2, 2, k=2)
    assert quotient_distance_bruteforce(a, b, kary_hamming, rel) == 1
    # cross-check against the raw two-sided scan
    assert _raw_min_over_relabelings(a, b) == 1


def test_bruteforce_matches_raw_scan_randomly():
    rng = np.random.default_rng(3)
    rel = relabeling_relation(3)
    for _ in range(60):
        a = KaryVector.random(5, 3, rng)
        b = KaryVector.random(5, 3, rng)
        assert quotient_distance_bruteforce(a, b, kary_hamming, rel) == _raw_min_over_relabelings(a, b)


def test_quotient_segment_examples():
    rel = relabeling_relation(2)
    qd = QuotientDistance(kary_hamming, rel)
    x = _kv(1, 1, 2, k=2)
    y = _kv(1, 2, 2, k=2)
    z_same = _kv(2, 2, 1, k=2)  # same class as x
    assert quotient_segment_contains(x, y, x, qd)
    assert quotient_segment_contains(x, y, z_same, qd)
    # d(x,z)=1, d(z,y)=1, d(x,y)=1 -> off segment
    z = _kv(1, 1, 1, k=2)
    assert qd(x, z) == 1 and qd(z, y) == 1 and qd(x, y) == 1
    assert not quotient_segment_contains(x, y, z, qd)


def test_normalize_examples():
    rel = relabeling_relation(2)
    p1 = _kv(1, 1, 2, 2, k=2)
    p2 = _kv(2, 2, 1, 1, k=2)
    out = normalize(p1, p2, kary_hamming, rel)
    assert out == p1
    # same parent: distance zero representative
    assert kary_hamming(p1, normalize(p1, p1, kary_hamming, rel)) == 0


def test_normalize_identity_relation_is_noop():
    ident = EquivRelation(lambda a, b: a == b, lambda a: [a], name="identity")
    assert normalize("0000", "1010", hamming, ident) == "1010"
    assert quotient_distance_bruteforce("0000", "1010", hamming, ident) == 2


def test_normalize_stays_in_class_and_attains_quotient():
    rng = np.random.default_rng(5)
    rel = relabeling_relation(3)
    for _ in range(40):
        p1 = KaryVector.random(5, 3, rng)
        p2 = KaryVector.random(5, 3, rng)
        out = normalize(p1, p2, kary_hamming, rel)
        assert rel.same_class(out, p2)
        assert kary_hamming(p1, out) == quotient_distance_bruteforce(p1, p2, kary_hamming, rel)


def test_equivalence_axioms_small_space():
    rel = relabeling_relation(2)
    pts = enumerate_kary(2, 3)
    assert check_equivalence_axioms(pts, rel) == []


def test_quotient_distance_is_metric_on_small_space():
    from geocross import check_metric_axioms

    rel = relabeling_relation(2)
    pts = enumerate_kary(2, 4)
    qd = QuotientDistance(kary_hamming, rel)
    report = check_metric_axioms(pts, qd, equiv=rel.same_class)
    assert report.ok, report.summary()


def test_capacity_error_names_bound():
    big = EquivRelation(
        lambda a, b: True,
        lambda a: list(range(2000)),
        name="huge",
    )
    with pytest.raises(CapacityError) as exc:
        quotient_distance_bruteforce(0, 1, lambda x, y: 0, big)
    assert "1000000" in str(exc.value)
