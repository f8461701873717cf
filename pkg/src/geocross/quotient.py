"""Quotient metric spaces and the generic normalization operator.

An equivalence relation over a genotype space induces a quotient
distance: the minimum of the base distance over all pairs of class
representatives. Normalizing a parent means replacing it by the member
of its class closest to the other parent; crossover after normalization
is how a quotient geometric crossover is implemented on plain genotypes.

Everything here is the slow, obviously-correct reference path; each
representation module ships a specialized equivalent that is tested
against these functions.
"""

from dataclasses import dataclass
from typing import Any, Callable, Optional, Sequence

from .errors import CapacityError
from .metric import Distance, Point

# quotient_distance_bruteforce refuses to scan more representative pairs
PAIR_LIMIT = 1_000_000


@dataclass
class EquivRelation:
    """Equivalence relation given by a class predicate and a class enumerator.

    ``class_members(x)`` must return a finite, deterministically ordered
    sequence containing x's entire class (x included, no duplicates); its
    order defines the canonical tie-break used by :func:`normalize`.
    """

    same_class: Callable[[Point, Point], bool]
    class_members: Callable[[Point], Sequence]
    name: str = ""


def quotient_distance_bruteforce(x: Point, y: Point, base: Distance, rel: EquivRelation) -> int:
    """Minimum base distance over all representative pairs of the two classes.

    This is the reference oracle for every specialized quotient distance.
    """
    mx = list(rel.class_members(x))
    my = list(rel.class_members(y))
    if len(mx) * len(my) > PAIR_LIMIT:
        raise CapacityError(
            f"class pair enumeration needs {len(mx) * len(my)} distance evaluations",
            PAIR_LIMIT,
        )
    return min(base(u, v) for u in mx for v in my)


@dataclass
class QuotientDistance:
    """Quotient of ``base`` by ``rel``; calls a registered exact
    specialized distance when one is supplied, the brute-force oracle
    otherwise."""

    base: Distance
    rel: EquivRelation
    dist_fn: Optional[Distance] = None

    def __call__(self, x: Point, y: Point) -> int:
        if self.dist_fn is not None:
            return self.dist_fn(x, y)
        return quotient_distance_bruteforce(x, y, self.base, self.rel)


def quotient_segment_contains(x: Point, y: Point, z: Point, qd: QuotientDistance) -> bool:
    """True iff z's class lies on the quotient segment between x's and y's."""
    return qd(x, z) + qd(z, y) == qd(x, y)


def normalize(p1: Point, p2: Point, base: Distance, rel: EquivRelation) -> Point:
    """Member of p2's class closest to p1 under ``base``.

    Ties go to the earliest member in the class enumeration order.
    """
    members = list(rel.class_members(p2))
    if len(members) > PAIR_LIMIT:
        raise CapacityError(f"class enumeration has {len(members)} members", PAIR_LIMIT)
    best = None
    best_d = None
    for m in members:
        dm = base(p1, m)
        if best_d is None or dm < best_d:
            best, best_d = m, dm
    return best


def check_equivalence_axioms(points: Sequence[Point], rel: EquivRelation) -> list:
    """Reflexivity, symmetry, transitivity and membership violations of
    ``rel`` over a point sample. Empty list means all hold."""
    pts = list(points)
    bad: list[Any] = []
    for x in pts:
        if not rel.same_class(x, x):
            bad.append(("reflexive", x))
        if not any(rel.same_class(x, m) for m in rel.class_members(x) if m == x):
            bad.append(("membership", x))
    n = len(pts)
    rel_matrix = [[rel.same_class(a, b) for b in pts] for a in pts]
    for i in range(n):
        for j in range(n):
            if rel_matrix[i][j] != rel_matrix[j][i]:
                bad.append(("symmetric", pts[i], pts[j]))
            for m in range(n):
                if rel_matrix[i][m] and rel_matrix[m][j] and not rel_matrix[i][j]:
                    bad.append(("transitive", pts[i], pts[m], pts[j]))
    return bad
