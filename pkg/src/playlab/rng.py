"""Deterministic random streams for reproducible parallel simulation.

Every game gets its own stream, derived as a pure function of
(master_seed, game_index).  The generator is xoshiro256** seeded through
splitmix64, implemented here in plain Python and mirrored bit-for-bit by
the compiled engine, so both backends consume identical draw sequences.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _splitmix64(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


class GameRng:
    """xoshiro256** stream; integer draws only (all the simulation needs)."""

    __slots__ = ("_s0", "_s1", "_s2", "_s3")

    def __init__(self, s0: int, s1: int, s2: int, s3: int):
        if s0 == s1 == s2 == s3 == 0:
            s0 = 1  # all-zero state is the one invalid xoshiro seed
        self._s0, self._s1, self._s2, self._s3 = s0, s1, s2, s3

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self._s0, self._s1, self._s2, self._s3
        result = _rotl(s1 * 5 & _MASK64, 7) * 9 & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._s0, self._s1, self._s2, self._s3 = s0, s1, s2, s3
        return result

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n) by unbiased rejection sampling."""
        if n <= 0:
            raise ValueError("randbelow() requires n >= 1")
        threshold = (1 << 64) % n
        while True:
            r = self.next_u64()
            if r >= threshold:
                return r % n

    def choice(self, seq):
        return seq[self.randbelow(len(seq))]

    def state(self) -> tuple[int, int, int, int]:
        return (self._s0, self._s1, self._s2, self._s3)


def spawn_game_rng(master_seed: int, game_index: int) -> GameRng:
    """Derive the stream for one game; independent of thread count or order."""
    if game_index < 0:
        raise ValueError("game_index must be >= 0")
    z = (master_seed + _GOLDEN * (game_index + 1)) & _MASK64
    words = []
    for _ in range(4):
        z = (z + _GOLDEN) & _MASK64
        words.append(_splitmix64(z))
    return GameRng(*words)


def spawn_state(master_seed: int, game_index: int) -> tuple[int, int, int, int]:
    """State words for the derived stream (used to seed the compiled engine)."""
    return spawn_game_rng(master_seed, game_index).state()
