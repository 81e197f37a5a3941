"""Deterministic seed derivation.

Every randomized routine in this package takes a 64-bit seed and derives
child seeds through :func:`mix`, so a logged seed reproduces a whole
experiment (restart attempt t always uses ``mix(seed, t)``).
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(x: int) -> int:
    """One step of the splitmix64 output function (64-bit avalanche)."""
    x = (x + _GOLDEN) & _MASK
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return (z ^ (z >> 31)) & _MASK


def mix(seed: int, stream: int) -> int:
    """Derive a child seed; distinct streams give decorrelated generators."""
    return splitmix64(splitmix64(seed & _MASK) ^ ((stream * _GOLDEN) & _MASK))


def generator(seed: int) -> np.random.Generator:
    """A numpy generator seeded with a (possibly mixed) 64-bit seed."""
    return np.random.default_rng(np.uint64(seed & _MASK))
