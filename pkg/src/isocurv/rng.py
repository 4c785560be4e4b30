"""Deterministic 64-bit generator for seeded sampling.

SplitMix64: the state advances by the golden-ratio increment
0x9E3779B97F4A7C15 and each output is finalized by the xor-shift /
multiply mix with constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB
(shifts 30, 27, 31).  The update is spelled out here, with no dependence
on platform or interpreter hashing, so a seeded run reproduces
bit-for-bit anywhere.

Uniform doubles take the top 53 bits of one output, giving values on
[0, 1) with the usual 2**-53 grid.
"""

from __future__ import annotations

__all__ = ["SplitMix64"]

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Tiny deterministic generator; one 64-bit word of state."""

    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        u = (self.next_u64() >> 11) * 2.0**-53
        return lo + (hi - lo) * u

    def choice(self, items):
        return items[self.next_u64() % len(items)]

    def sign(self) -> float:
        return 1.0 if (self.next_u64() & 1) == 0 else -1.0
