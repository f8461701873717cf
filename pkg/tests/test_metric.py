import numpy as np
import pytest

from geocross import (
    RepresentationMismatch,
    check_geometricity,
    check_metric_axioms,
    hamming,
    segment_contains,
    uniform_crossover,
)
from geocross.metric import all_strings


def test_hamming_basics():
    assert hamming("0000", "1111") == 4
    assert hamming("0000", "0011") == 2
    assert hamming("abc", "abc") == 0
    assert hamming(np.array([1, 2, 3]), np.array([1, 0, 3])) == 1
    with pytest.raises(RepresentationMismatch):
        hamming("ab", "abc")


def test_segment_contains_examples():
    # 2 + 2 = 4: on segment
    assert segment_contains("0000", "1111", "0011", hamming)
    # 2 + 4 != 2: off segment
    assert not segment_contains("0000", "0011", "1100", hamming)
    # degenerate segment
    assert segment_contains("s", "s", "s", hamming)


def test_segment_endpoints_and_symmetry():
    rng = np.random.default_rng(7)
    for _ in range(50):
        x = "".join(rng.choice(list("01"), 6))
        y = "".join(rng.choice(list("01"), 6))
        z = "".join(rng.choice(list("01"), 6))
        assert segment_contains(x, y, x, hamming)
        assert segment_contains(x, y, y, hamming)
        assert segment_contains(x, y, z, hamming) == segment_contains(y, x, z, hamming)


def test_hamming_axioms_exhaustive_3bit():
    pts = all_strings("01", 3)
    assert len(pts) == 8
    report = check_metric_axioms(pts, hamming)
    assert report.ok, report.summary()


def test_symmetry_violation_reported():
    # signed difference is not symmetric
    pts = [0, 1, 2, 3]
    d = lambda x, y: x - y
    report = check_metric_axioms(pts, d)
    assert report.symmetry_violations


def test_identity_violation_reported():
    pts = ["a", "b"]
    d = lambda x, y: 0
    report = check_metric_axioms(pts, d)
    assert report.identity_violations


def test_triangle_violation_reported():
    # d(0,2)=5 > d(0,1)+d(1,2)=2
    table = {(0, 0): 0, (1, 1): 0, (2, 2): 0, (0, 1): 1, (1, 2): 1, (0, 2): 5}
    d = lambda x, y: table.get((min(x, y), max(x, y)))
    report = check_metric_axioms([0, 1, 2], d)
    assert report.triangle_violations


def test_edit_distance_axioms_small():
    from geocross import edit_distance
    from geocross.sequence import all_sequences

    pts = all_sequences("ab", 3)
    assert len(pts) == 15
    report = check_metric_axioms(pts, edit_distance)
    assert report.ok, report.summary()


def _random_pairs(n_pairs, length, rng):
    return [
        (
            "".join(rng.choice(list("01"), length)),
            "".join(rng.choice(list("01"), length)),
        )
        for _ in range(n_pairs)
    ]


def test_uniform_crossover_is_geometric_under_hamming():
    rng = np.random.default_rng(11)
    pairs = _random_pairs(100, 6, rng)
    report = check_geometricity(uniform_crossover, hamming, pairs, trials_per_pair=50)
    assert report.total == 100 * 50
    assert report.violation_rate == 0.0, report.summary()


def test_random_genotype_pseudo_crossover_violates():
    # negative control: offspring ignores both parents
    def random_genotype(x, y, rng):
        return "".join("01"[b] for b in rng.integers(0, 2, size=len(x)))

    rng = np.random.default_rng(13)
    pairs = _random_pairs(100, 6, rng)
    report = check_geometricity(random_genotype, hamming, pairs, trials_per_pair=20)
    assert report.violation_rate > 0.05


def test_return_first_parent_is_geometric():
    op = lambda x, y, rng: x
    rng = np.random.default_rng(17)
    pairs = _random_pairs(30, 6, rng)
    report = check_geometricity(op, hamming, pairs, trials_per_pair=3)
    assert report.violation_rate == 0.0


def test_check_geometricity_streams_are_reproducible():
    def noisy(x, y, rng):
        return uniform_crossover(x, y, rng)

    pairs = _random_pairs(10, 6, np.random.default_rng(19))
    r1 = check_geometricity(noisy, hamming, pairs, trials_per_pair=5, seed=42)
    r2 = check_geometricity(noisy, hamming, pairs, trials_per_pair=5, seed=42)
    assert r1.total == r2.total and r1.violations == r2.violations
