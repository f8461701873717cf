"""Counter-based random streams.

Every randomized operator takes an explicit ``numpy.random.Generator``; no
module holds RNG state. Streams are derived from a Philox key made of the
base seed and a structured stream index, so any (seed, purpose, major,
minor) tuple names the same stream no matter in which order or thread it
is consumed.

Stream index layout (64 bits): ``purpose << 56 | major << 28 | minor``.
``major`` is typically a generation number and ``minor`` an individual
index; both must stay below 2**28.
"""

import numpy as np

MASK64 = (1 << 64) - 1

# purpose codes
INIT = 0
BREED = 1
CHECK = 2


def stream(seed: int, purpose: int, major: int = 0, minor: int = 0) -> np.random.Generator:
    """Return the generator for one named stream."""
    if not (0 <= major < (1 << 28) and 0 <= minor < (1 << 28) and 0 <= purpose < (1 << 8)):
        raise ValueError("stream index out of range")
    idx = (purpose << 56) | (major << 28) | minor
    key = np.array([seed & MASK64, idx], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def randbelow(rng: np.random.Generator, n: int) -> int:
    """Uniform integer in [0, n) for arbitrarily large Python ints."""
    if n <= 0:
        raise ValueError("n must be positive")
    if n <= (1 << 62):
        return int(rng.integers(0, n))
    bits = n.bit_length()
    while True:
        r = 0
        for _ in range((bits + 61) // 62):
            r = (r << 62) | int(rng.integers(0, 1 << 62))
        r &= (1 << bits) - 1
        if r < n:
            return r
