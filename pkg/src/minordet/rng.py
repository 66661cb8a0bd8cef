"""Deterministic per-trial seeding and integer matrix sampling.

Every randomized routine in the package derives one child RNG per trial
from (seed, trial index) through a splitmix64 mix, so trial t of a run is
reproducible in isolation and independent of how many trials ran before it.
"""

from __future__ import annotations

import random

from .exactmat import MatrixExpr

_M64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _M64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


def trial_seed(seed: int, trial: int) -> int:
    return _splitmix64((_splitmix64(seed & _M64) + trial) & _M64)


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(trial_seed(seed, trial))


def rand_int_matrix(rng: random.Random, rows: int, cols: int, bound: int) -> MatrixExpr:
    """Uniform entries in [-bound, bound], drawn row-major."""
    ent = [rng.randint(-bound, bound) for _ in range(rows * cols)]
    return MatrixExpr(rows, cols, ent)
