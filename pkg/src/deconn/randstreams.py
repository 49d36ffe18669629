"""Seeded randomness: named substreams, pairwise-independent index generators,
Bernoulli edge masks, and per-edge fingerprints.

Every random choice in the package flows from one 64-bit master seed, so a
fixed (seed, input, deletion order) triple replays bit-for-bit.  Substreams
are derived from the master seed with fixed integer tags, which keeps stream
assignment independent of call order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# substream tags; appending to this list is safe, reordering is not
TAG_LEVEL_SAMPLING = 1
TAG_PROBE = 2
TAG_BUCKETS = 3
TAG_FINGERPRINTS = 4
TAG_TRACKER = 5
TAG_BENCH = 6

_MASK64 = (1 << 64) - 1


class MasterSeed:
    """Root of all randomness; hand out generators by (tag, index)."""

    def __init__(self, seed: int):
        self.seed = int(seed) & _MASK64

    def generator(self, tag: int, index: int = 0) -> np.random.Generator:
        ss = np.random.SeedSequence(entropy=self.seed, spawn_key=(tag, index))
        return np.random.Generator(np.random.PCG64(ss))

    def child_seed(self, tag: int, index: int = 0) -> int:
        ss = np.random.SeedSequence(entropy=self.seed, spawn_key=(tag, index))
        return int(ss.generate_state(1, dtype=np.uint64)[0])


def _is_prime(x: int) -> bool:
    if x < 2:
        return False
    if x % 2 == 0:
        return x == 2
    d = 3
    while d * d <= x:
        if x % d == 0:
            return False
        d += 2
    return True


def smallest_prime_at_least(x: int) -> int:
    p = max(2, x)
    while not _is_prime(p):
        p += 1
    return p


@dataclass(frozen=True)
class PairwiseGen:
    """Index generator ``r(j) = ((a*j + b) mod prime) mod m`` for j in [0, s).

    With a, b drawn uniformly from [0, prime), any two outputs at distinct
    indices j != k are jointly uniform over pairs when m equals the prime;
    each output costs O(1).  A fresh (a, b) pair per level keeps the levels
    independent of each other.
    """

    prime: int
    a: int
    b: int
    m: int
    s: int

    def value(self, j: int) -> int:
        return ((self.a * j + self.b) % self.prime) % self.m

    def values(self) -> list[int]:
        return [self.value(j) for j in range(self.s)]


def pairwise_gen(rng: np.random.Generator, m: int, s: int,
                 prime: int | None = None) -> PairwiseGen:
    if m < 1:
        raise ValueError("pairwise generator needs a nonempty range")
    if prime is None:
        prime = smallest_prime_at_least(max(m, 2))
    a = int(rng.integers(0, prime))
    b = int(rng.integers(0, prime))
    return PairwiseGen(prime=prime, a=a, b=b, m=m, s=s)


def bernoulli_ids(rng: np.random.Generator, m: int, q: float) -> np.ndarray:
    """Boolean membership array: each of the m ids kept with probability q."""
    if not (0.0 < q <= 1.0):
        raise ValueError(f"sampling probability must be in (0, 1], got {q}")
    if q >= 1.0:
        return np.ones(m, dtype=bool)
    return rng.random(m) < q


def _splitmix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def fingerprint_bits(n: int, gamma: int) -> int:
    """Fingerprint width: gamma words of ceil(log2 n) bits, at least 1 bit."""
    if gamma < 1:
        raise ValueError("gamma must be >= 1")
    word = max(1, int(np.ceil(np.log2(max(n, 2)))))
    return gamma * word


def fingerprint(seed: int, e: int, gamma: int, n: int) -> int:
    """Uniform bit-string for edge ``e``, stable per (seed, e).

    Bits come from counter-mode splitmix rounds, so fingerprints for distinct
    edges are independent for all statistical purposes here; XOR of any value
    with itself is zero, which is what the sketch cancellation relies on.
    """
    bits = fingerprint_bits(n, gamma)
    out = 0
    produced = 0
    ctr = 0
    base = _splitmix64((seed & _MASK64) ^ _splitmix64(e & _MASK64))
    while produced < bits:
        word = _splitmix64(base ^ (0xA0761D6478BD642F * (ctr + 1) & _MASK64))
        out = (out << 64) | word
        produced += 64
        ctr += 1
    return out & ((1 << bits) - 1)
