"""Seed-to-state initialization in pure integer arithmetic.

Reproduces the James/LAMMPS seeding procedure bit for bit: the four small
working values walk a lagged multiplicative sequence mod 179 and an LCG mod
169, and each lane collects 24 bits from the high end down.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .core import ArithState, FibState, RanmarState
from .params import C0, R, S, SEED_MAX


def check_seed(seed: int) -> int:
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise TypeError(f"seed must be an integer, got {type(seed).__name__}")
    seed = int(seed)
    if not 0 <= seed <= SEED_MAX:
        raise ValueError(f"seed {seed} outside [0, {SEED_MAX}]")
    return seed


def init(seed: int) -> RanmarState:
    """State of a freshly seeded generator (cursors 97/33, v = 362436)."""
    seed = check_seed(seed)
    lane = np.empty(R, dtype=np.int64)
    _kernels.seed_lanes(seed, lane)
    return RanmarState(FibState(lane, R, S), ArithState(C0))
