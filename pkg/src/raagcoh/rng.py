"""SplitMix64 generator.

The state is a 64-bit integer. Each draw advances the state by the golden
gamma 0x9E3779B97F4A7C15 and returns the mixed value::

    z = state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2**64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2**64
    return z ^ (z >> 31)

Residues mod p are drawn by rejection: values at or above the largest
multiple of p not exceeding 2**64 are discarded, then ``z % p`` is returned.
"""

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, p: int) -> int:
        """Uniform integer in ``range(p)``."""
        if p <= 0:
            raise ValueError("p must be positive")
        limit = (1 << 64) - ((1 << 64) % p)
        while True:
            z = self.next_u64()
            if z < limit:
                return z % p
