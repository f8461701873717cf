"""Metric segments and the geometricity checker on binary strings.

A crossover is geometric under a distance d when every child z of parents
x, y satisfies d(x,z) + d(z,y) = d(x,y). This script shows the segment
predicate, verifies the metric axioms of Hamming distance exhaustively,
and contrasts uniform crossover (geometric) with a parent-ignoring
operator (caught immediately).
"""

import numpy as np

from geocross import (
    check_geometricity,
    check_metric_axioms,
    hamming,
    segment_contains,
    uniform_crossover,
)
from geocross.metric import all_strings

x, y = "000000", "111111"
print(f"parents {x} and {y}, Hamming distance {hamming(x, y)}")
for z in ("000111", "101010", "111111"):
    print(f"  {z} on segment [x;y]? {segment_contains(x, y, z, hamming)}")

print("\nHamming axioms on all 3-bit strings:")
report = check_metric_axioms(all_strings("01", 3), hamming)
print(" ", report.summary())

rng = np.random.default_rng(0)
pairs = [
    ("".join(rng.choice(list("01"), 6)), "".join(rng.choice(list("01"), 6)))
    for _ in range(100)
]

print("\nuniform crossover, 100 pairs x 50 trials:")
rep = check_geometricity(uniform_crossover, hamming, pairs, trials_per_pair=50)
print(" ", rep.summary())


def random_genotype(x, y, rng):
    return "".join("01"[b] for b in rng.integers(0, 2, size=len(x)))


print("\nparent-ignoring operator on the same pairs:")
rep = check_geometricity(random_genotype, hamming, pairs, trials_per_pair=50)
print(" ", rep.summary())
