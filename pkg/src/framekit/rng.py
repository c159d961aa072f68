"""Deterministic, implementation-portable random stream.

The generator is counter based: output ``k`` of stream ``seed`` is
``mix64(seed + (k + 1) * GOLDEN)`` where ``mix64`` is the splitmix64
finalizer.  Uniform doubles take the top 53 bits; normal deviates come
from Box-Muller pairs.  The same (seed, counter) pair therefore yields
the same values in any language, which is why this exists instead of
``numpy.random``.
"""

import numpy as np

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_U64 = np.uint64(0xFFFFFFFFFFFFFFFF)


def _mix64(z):
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


class Stream:
    """Splitmix64 counter stream with a persistent cursor."""

    def __init__(self, seed: int):
        self._seed = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
        self._counter = 0

    def raw(self, count: int) -> np.ndarray:
        """Next ``count`` raw 64-bit words."""
        idx = np.arange(self._counter + 1, self._counter + count + 1, dtype=np.uint64)
        self._counter += count
        with np.errstate(over="ignore"):
            return _mix64(self._seed + idx * _GOLDEN)

    def uniforms(self, count: int) -> np.ndarray:
        """Doubles in [0, 1)."""
        return (self.raw(count) >> np.uint64(11)) * 2.0**-53

    def normals(self, count: int) -> np.ndarray:
        """Standard normal deviates via Box-Muller."""
        pairs = (count + 1) // 2
        # shift into (0, 1] so the log never sees zero
        u1 = (self.raw(pairs) >> np.uint64(11)) * 2.0**-53 + 2.0**-54
        u2 = self.uniforms(pairs)
        r = np.sqrt(-2.0 * np.log(u1))
        theta = 2.0 * np.pi * u2
        out = np.concatenate([r * np.cos(theta), r * np.sin(theta)])
        return out[:count]

    def complex_normals(self, count: int) -> np.ndarray:
        z = self.normals(2 * count)
        return z[:count] + 1j * z[count:]
