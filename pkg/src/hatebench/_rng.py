"""Seedable counter-based PRNG used wherever bit-stable shuffles are required.

numpy generators are deterministic too, but the shuffle that decides the
train/test membership must be reproducible from the documented algorithm
alone, independent of any library version.  SplitMix64 is small enough to
restate in a README and has no state beyond a single 64-bit counter.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator (Steele, Lea & Flood 2014).

    next() advances a 64-bit counter by the golden-gamma constant and hashes
    it through two xor-shift-multiply rounds.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection sampling (no modulo bias)."""
        if n <= 0:
            raise ValueError("n must be positive")
        # Accept draws below the largest multiple of n; rejection is rare.
        threshold = ((_MASK64 + 1) // n) * n
        while True:
            z = self.next_u64()
            if z < threshold:
                return z % n


def shuffled(items, seed: int) -> list:
    """Fisher-Yates shuffle driven by SplitMix64; pure, returns a new list."""
    out = list(items)
    rng = SplitMix64(seed)
    for i in range(len(out) - 1, 0, -1):
        j = rng.next_below(i + 1)
        out[i], out[j] = out[j], out[i]
    return out
