"""Portable counter-based PRNG.

Output ``k`` (1-based) of a stream with key ``K`` is ``mix64(K + k * GAMMA)``
modulo 2**64, where ``mix64`` is the SplitMix64 finalizer and ``GAMMA`` is
``0x9E3779B97F4A7C15``.  A stream built from seed ``s`` has key ``mix64(s)``.
``split(label)`` derives a child key ``mix64(K ^ fnv1a64(label))`` without
touching the parent counter.  Bounded integers use rejection sampling on the
raw 64-bit outputs so every implementation draws identical values.
"""

from __future__ import annotations

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


def fnv1a64(label: str) -> int:
    h = 0xCBF29CE484222325
    for b in label.encode("utf-8"):
        h = ((h ^ b) * 0x100000001B3) & MASK
    return h


class CounterRng:
    __slots__ = ("key", "counter")

    def __init__(self, seed: int = 0, *, key: int | None = None):
        self.key = mix64(seed) if key is None else key & MASK
        self.counter = 0

    def split(self, label) -> "CounterRng":
        return CounterRng(key=mix64(self.key ^ fnv1a64(str(label))))

    def next_u64(self) -> int:
        self.counter += 1
        return mix64(self.key + self.counter * GAMMA)

    def randbelow(self, k: int) -> int:
        if k <= 0:
            raise ValueError("randbelow needs a positive bound")
        limit = ((1 << 64) // k) * k
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in the closed range ``[lo, hi]``."""
        return lo + self.randbelow(hi - lo + 1)

    def shuffle(self, items: list) -> None:
        """Fisher-Yates, high index first."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]
