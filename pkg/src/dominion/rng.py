"""Seeded deterministic randomness for reproducible corpora.

The generator is splitmix64 (the standard constants from Steele, Lea and
Vigna's public-domain reference). It is part of the reproducibility
contract: any implementation, in any language, that follows the draw
procedure documented on :class:`SplitMix64` regenerates identical random
trees and identical random leaf subsets from the same seed.
"""

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """splitmix64 stream seeded with a 64-bit integer (wider seeds are
    truncated to their low 64 bits).

    Draw procedure, normative for cross-implementation reproducibility:

    * ``next_u64``: state += 0x9E3779B97F4A7C15 (mod 2^64); then mix
      ``z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
      z *= 0x94D049BB133111EB; z ^= z >> 31`` (all mod 2^64).
    * ``below(n)``: draw ``next_u64`` until the value is below
      ``(2^64 // n) * n``, then return ``value % n`` (rejection sampling,
      exactly uniform on ``[0, n)``).
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Exactly uniform integer in [0, n)."""
        if n <= 0:
            raise ValueError("bound must be positive")
        limit = ((1 << 64) // n) * n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def sample(self, items, k: int) -> list:
        """First k entries of a seeded Fisher-Yates shuffle of `items`."""
        pool = list(items)
        if not 0 <= k <= len(pool):
            raise ValueError("sample size out of range")
        for i in range(k):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]
