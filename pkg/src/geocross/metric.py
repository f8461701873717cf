"""Representation-independent metric machinery.

A distance is any callable ``d(x, y) -> int`` returning an exact
non-negative integer. The metric segment between x and y is the set of
points z with ``d(x,z) + d(z,y) == d(x,y)``; a crossover operator is
geometric under d when every offspring it can produce lies on the segment
between its parents. Both facts are checked here in exact integer
arithmetic, never with tolerances.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Iterable, Optional, Sequence

import numpy as np

from .errors import CapacityError, RepresentationMismatch
from . import rng as _rng

Point = Any
Distance = Callable[[Point, Point], int]
CrossoverOp = Callable[[Point, Point, np.random.Generator], Point]

# spaces larger than this are not enumerated exhaustively
EXHAUSTIVE_LIMIT = 10_000


def hamming(x, y) -> int:
    """Hamming distance between two equal-length sequences or arrays."""
    if isinstance(x, np.ndarray) or isinstance(y, np.ndarray):
        x = np.asarray(x)
        y = np.asarray(y)
        if x.shape != y.shape:
            raise RepresentationMismatch(f"shape mismatch: {x.shape} vs {y.shape}")
        return int((x != y).sum())
    if len(x) != len(y):
        raise RepresentationMismatch(f"length mismatch: {len(x)} vs {len(y)}")
    return sum(a != b for a, b in zip(x, y))


def segment_contains(x: Point, y: Point, z: Point, d: Distance) -> bool:
    """True iff z lies on the metric segment [x; y] under d."""
    return d(x, z) + d(z, y) == d(x, y)


def uniform_crossover(x, y, rng: np.random.Generator):
    """Per-locus fair-coin crossover for equal-length strings or 1-d arrays."""
    if isinstance(x, str):
        if len(x) != len(y):
            raise RepresentationMismatch(f"length mismatch: {len(x)} vs {len(y)}")
        mask = rng.integers(0, 2, size=len(x))
        return "".join(a if m == 0 else b for a, b, m in zip(x, y, mask))
    x = np.asarray(x)
    y = np.asarray(y)
    if x.shape != y.shape:
        raise RepresentationMismatch(f"shape mismatch: {x.shape} vs {y.shape}")
    mask = rng.integers(0, 2, size=x.shape).astype(bool)
    return np.where(mask, y, x)


def all_strings(alphabet: str, length: int) -> list[str]:
    """Every string of the given length, in lexicographic order."""
    count = len(alphabet) ** length
    if count > EXHAUSTIVE_LIMIT:
        raise CapacityError(f"{count} strings exceed the exhaustive limit", EXHAUSTIVE_LIMIT)
    return ["".join(p) for p in product(alphabet, repeat=length)]


@dataclass
class AxiomReport:
    """Outcome of a metric-axiom check over a point sample.

    Violation entries carry the offending points and the distances
    involved, so a failing report is directly actionable.
    """

    n_points: int
    identity_violations: list = field(default_factory=list)
    symmetry_violations: list = field(default_factory=list)
    triangle_violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.identity_violations or self.symmetry_violations or self.triangle_violations)

    def summary(self) -> str:
        return (
            f"{self.n_points} points: "
            f"{len(self.identity_violations)} identity, "
            f"{len(self.symmetry_violations)} symmetry, "
            f"{len(self.triangle_violations)} triangle violations"
        )


def check_metric_axioms(
    points: Sequence[Point],
    d: Distance,
    equiv: Optional[Callable[[Point, Point], bool]] = None,
) -> AxiomReport:
    """Check identity, symmetry and the triangle inequality on a sample.

    ``equiv`` is the identity notion: d(x,y) == 0 must hold exactly when
    ``equiv(x, y)``. It defaults to ``==``, the right notion for genuine
    metrics; pass the class predicate when d is a quotient distance
    evaluated on representatives.
    """
    pts = list(points)
    n = len(pts)
    if n == 0:
        raise ValueError("empty point sample")
    if equiv is None:
        equiv = lambda a, b: a == b

    D = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(pts):
        for j, b in enumerate(pts):
            D[i, j] = d(a, b)

    report = AxiomReport(n_points=n)
    for i in range(n):
        for j in range(n):
            zero = D[i, j] == 0
            same = equiv(pts[i], pts[j])
            if zero != same:
                report.identity_violations.append((pts[i], pts[j], int(D[i, j])))

    sym_bad = np.argwhere(D != D.T)
    for i, j in sym_bad:
        if i < j:
            report.symmetry_violations.append((pts[i], pts[j], int(D[i, j]), int(D[j, i])))

    # d(i,j) <= d(i,m) + d(m,j) for every midpoint m
    for m in range(n):
        bad = np.argwhere(D > D[:, m : m + 1] + D[m : m + 1, :])
        for i, j in bad:
            report.triangle_violations.append(
                (pts[i], pts[j], pts[m], int(D[i, j]), int(D[i, m]), int(D[m, j]))
            )
    return report


@dataclass
class GeometricityReport:
    """Offspring-on-segment census for a crossover operator."""

    total: int
    violations: list = field(default_factory=list)

    @property
    def violation_rate(self) -> float:
        return len(self.violations) / self.total if self.total else 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        return f"{len(self.violations)}/{self.total} offspring off-segment (rate {self.violation_rate:.4f})"


def check_geometricity(
    op: CrossoverOp,
    d: Distance,
    pairs: Iterable[tuple[Point, Point]],
    trials_per_pair: int,
    seed: int = 0,
) -> GeometricityReport:
    """Run ``op`` on each parent pair with fresh RNG streams and record
    every offspring that falls off the metric segment between its parents."""
    if trials_per_pair < 1:
        raise ValueError("trials_per_pair must be >= 1")
    violations = []
    total = 0
    for p_idx, (x, y) in enumerate(pairs):
        dxy = d(x, y)
        for t in range(trials_per_pair):
            z = op(x, y, _rng.stream(seed, _rng.CHECK, p_idx, t))
            total += 1
            if d(x, z) + d(z, y) != dxy:
                violations.append((x, y, z))
    return GeometricityReport(total=total, violations=violations)
