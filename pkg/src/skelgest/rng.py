"""Portable seeded random numbers.

Every stochastic step in this package (bootstrap sampling, synthetic noise,
train/test shuffling) draws from the counter-based splitmix64 generator so
that a seed reproduces bit-identical results on any platform and in any
reimplementation. The generator is frozen as:

    output(k) = mix64(seed + k * 0x9E3779B97F4A7C15)   (mod 2**64, k = 1, 2, ...)

where mix64 is the splitmix64 finalizer:

    z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27; z *= 0x94D049BB133111EB
    z ^= z >> 31

Derived quantities are also frozen:

  * uniform double in [0, 1): (output >> 11) * 2**-53
  * standard normals: Box-Muller on consecutive uniform pairs (u1 nudged to
    2**-53 when zero), first output sqrt(-2 ln u1) cos(2 pi u2), second the
    sin twin
  * integer in [0, n): output % n (modulo; n is tiny against 2**64 here)
  * substream i of a stream with seed s: seed = mix64(s + (i+1) * 0xBB67AE8584CAA73B)

Counter-based form means array draws vectorize with numpy uint64 arithmetic
while staying identical to the scalar path.
"""

import math

import numpy as np

_MASK = 0xFFFFFFFFFFFFFFFF
_GAMMA = 0x9E3779B97F4A7C15
_SPAWN_GAMMA = 0xBB67AE8584CAA73B
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB


def _mix(z):
    z &= _MASK
    z = ((z ^ (z >> 30)) * _M1) & _MASK
    z = ((z ^ (z >> 27)) * _M2) & _MASK
    return z ^ (z >> 31)


def _mix_array(z):
    # uint64 array ops wrap modulo 2**64, matching the scalar path
    z = z.astype(np.uint64, copy=True)
    z ^= z >> np.uint64(30)
    z *= np.uint64(_M1)
    z ^= z >> np.uint64(27)
    z *= np.uint64(_M2)
    z ^= z >> np.uint64(31)
    return z


class PortableRNG:
    """Deterministic stream of pseudo-random numbers for a 64-bit seed."""

    def __init__(self, seed):
        self._seed = int(seed) & _MASK
        self._count = 0

    @property
    def seed(self):
        return self._seed

    def spawn(self, index):
        """Independent child stream; used for per-tree / per-sample streams."""
        child = _mix((self._seed + (int(index) + 1) * _SPAWN_GAMMA) & _MASK)
        return PortableRNG(child)

    def next_u64(self):
        self._count += 1
        return _mix((self._seed + self._count * _GAMMA) & _MASK)

    def u64_array(self, n):
        ks = np.arange(self._count + 1, self._count + n + 1, dtype=np.uint64)
        self._count += n
        with np.errstate(over="ignore"):
            return _mix_array(np.uint64(self._seed) + ks * np.uint64(_GAMMA))

    def random(self):
        """Uniform double in [0, 1)."""
        return (self.next_u64() >> 11) * 2.0 ** -53

    def random_array(self, n):
        return (self.u64_array(n) >> np.uint64(11)).astype(np.float64) * 2.0 ** -53

    def integers(self, n, size=None):
        """Uniform integer(s) in [0, n)."""
        if size is None:
            return self.next_u64() % n
        return (self.u64_array(size) % np.uint64(n)).astype(np.int64)

    def normal(self):
        return float(self.normal_array(1)[0])

    def normal_array(self, n):
        """Standard normals via Box-Muller on consecutive uniform pairs."""
        pairs = (n + 1) // 2
        u = self.random_array(2 * pairs)
        u1 = u[0::2]
        u2 = u[1::2]
        u1[u1 == 0.0] = 2.0 ** -53
        r = np.sqrt(-2.0 * np.log(u1))
        theta = 2.0 * math.pi * u2
        out = np.empty(2 * pairs)
        out[0::2] = r * np.cos(theta)
        out[1::2] = r * np.sin(theta)
        return out[:n]

    def shuffle(self, items):
        """In-place Fisher-Yates shuffle of a list or 1-D array."""
        for i in range(len(items) - 1, 0, -1):
            j = int(self.integers(i + 1))
            items[i], items[j] = items[j], items[i]
