"""Deterministic pseudo-randomness built on splitmix64.

Every random artifact in this package is a pure function of a 64-bit seed.
The generator is splitmix64 (Steele/Lea/Vigna): from state ``s`` the k-th
output is ``mix64(s + (k+1) * GOLDEN) mod 2**64``.  It is tiny, platform
independent, and supports O(1) random access into its own stream, which is
what makes parallel Monte Carlo trials order-independent:

* instance exclusion tokens: outputs of the stream seeded by the instance
  seed, consumed 32 two-bit tokens per 64-bit output (low bits first);
* per-trial seeds: ``trial_seed(seed_base, t)`` is output ``t`` of the
  stream seeded by ``seed_base``.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """splitmix64 finalizer: a bijective 64-bit scramble."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def trial_seed(seed_base: int, index: int) -> int:
    """Seed for trial ``index``: output ``index`` of the splitmix64 stream of ``seed_base``."""
    if index < 0:
        raise ValueError("trial index must be >= 0")
    return mix64((seed_base + (index + 1) * GOLDEN) & MASK64)


class SplitMix64:
    """Sequential view of the splitmix64 stream for a given seed."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN) & MASK64
        return mix64(self._state)

    def randbelow(self, n: int) -> int:
        """Uniform draw from 0..n-1 by rejection (no modulo bias)."""
        if n <= 0:
            raise ValueError("randbelow needs n >= 1")
        limit = (MASK64 + 1) - ((MASK64 + 1) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def sample_distinct(self, n: int, count: int) -> list[int]:
        """``count`` distinct values from 0..n-1, in draw order."""
        if count > n:
            raise ValueError("cannot draw more distinct values than the range holds")
        chosen: list[int] = []
        seen = set()
        while len(chosen) < count:
            v = self.randbelow(n)
            if v not in seen:
                seen.add(v)
                chosen.append(v)
        return chosen
