"""Deterministic, splittable random source for the drawing tools.

The generator is splitmix64: a tiny, fully documented PRNG whose streams are
stable across platforms and library versions, which is what makes transcript
replay byte-exact years later. Each tool call receives its own stream,
derived from (session seed, turn index, call index), so inserting a call
never shifts the randomness of its neighbours.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK
    return z ^ (z >> 31)


class RandomSource:
    """splitmix64 stream seeded with a 64-bit unsigned integer."""

    def __init__(self, seed: int):
        self._state = seed & _MASK
        self.seed = self._state

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return _mix(self._state)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def split(self, *path: int) -> "RandomSource":
        """Derive an independent child stream from integer path components."""
        return RandomSource(derive_seed(self.seed, *path))


def derive_seed(base: int, *path: int) -> int:
    """Stable seed derivation: hash the base seed with each path component."""
    s = base & _MASK
    for part in path:
        s = _mix((s ^ (part & _MASK)) * 0xFF51AFD7ED558CCD & _MASK)
    return s
