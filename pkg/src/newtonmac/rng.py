"""Counter-keyed SplitMix64 streams.

Every random draw in the package comes from a stream keyed by a tuple of
integers such as ``(seed, suite_id, trial_index)``.  The key is folded into a
64-bit state with the SplitMix64 finaliser; the stream then advances the state
by the golden-ratio increment and emits ``mix(state)``.  A trial's numbers
therefore depend only on its key, never on scheduling order.
"""

from __future__ import annotations

import zlib
from fractions import Fraction

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15

GENERATOR_ID = "splitmix64(key-fold; state += 0x9E3779B97F4A7C15; out = mix(state))"


def mix64(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & MASK64
    return z ^ (z >> 31)


def stream_id(name: str) -> int:
    """Stable integer id for a named stream (CRC-32 of the UTF-8 name)."""
    return zlib.crc32(name.encode("utf-8"))


class SplitMix64:
    def __init__(self, *key: int):
        state = 0
        for word in key:
            state = mix64((state ^ (word & MASK64)) + GOLDEN & MASK64)
        self.state = state

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] by rejection (no modulo bias)."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError("empty range")
        limit = (1 << 64) - (1 << 64) % span
        while True:
            v = self.next_u64()
            if v < limit:
                return lo + v % span

    def rational(self, num_bound: int = 1000, den_max: int = 20) -> Fraction:
        num = self.randint(-num_bound, num_bound)
        return Fraction(num, self.randint(1, den_max))
