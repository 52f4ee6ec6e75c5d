"""Floating-point RANMAR exactly as LAMMPS runs it.

Used only as an oracle for the integer generator and as the baseline in
benchmarks. Every value it produces is a multiple of 2^-24 in [0, 1), so
binary64 subtraction and the +1 fix-ups never round.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .params import C0, D0, M, MOD, R, S
from .seeding import check_seed

CD = D0 / M
CM = MOD / M


@dataclass
class FloatState:
    x: np.ndarray  # float64, x[k - 1] holds lane k
    c: float
    i: int = R
    j: int = S

    def copy(self) -> FloatState:
        return FloatState(self.x.copy(), self.c, self.i, self.j)


def is_g24(value: float) -> bool:
    """True when ``value`` is ``a / 2^24`` for an integer ``0 <= a < 2^24``."""
    scaled = value * M
    return 0.0 <= value < 1.0 and scaled == int(scaled)


def step_float(state: FloatState) -> tuple[FloatState, float]:
    new = state.copy()
    x, i, j = new.x, new.i, new.j
    y = x[i - 1] - x[j - 1]
    if y < 0.0:
        y += 1.0
    x[i - 1] = y
    i -= 1
    if i == 0:
        i = 97
    j -= 1
    if j == 0:
        j = 97
    c = new.c - CD
    if c < 0.0:
        c += CM
    y -= c
    if y < 0.0:
        y += 1.0
    new.i, new.j, new.c = i, j, c
    return new, float(y)


def float_stream(state: FloatState, n: int) -> tuple[FloatState, np.ndarray]:
    """Run ``n`` calls through the compiled loop; returns (new state, outputs)."""
    new = state.copy()
    out = np.empty(int(n), dtype=np.float64)
    i, j, c = _kernels.float_f64(new.x, new.i, new.j, new.c, CD, CM, out)
    new.i, new.j, new.c = int(i), int(j), float(c)
    return new, out


def _ctrunc_div(a: int, b: int) -> int:
    q = abs(a) // abs(b)
    return q if (a >= 0) == (b > 0) else -q


def _crem(a: int, b: int) -> int:
    return a - b * _ctrunc_div(a, b)


def init_float(seed: int) -> FloatState:
    seed = check_seed(seed)
    ij = _ctrunc_div(seed - 1, 30082)
    kl = (seed - 1) - 30082 * ij
    i = _crem(_ctrunc_div(ij, 177), 177) + 2
    j = _crem(ij, 177) + 2
    k = _crem(_ctrunc_div(kl, 169), 178) + 1
    l = _crem(kl, 169)
    x = np.empty(R, dtype=np.float64)
    for ii in range(R):
        s = 0.0
        t = 0.5
        for _ in range(24):
            m = _crem(_crem(i * j, 179) * k, 179)
            i, j, k = j, k, m
            l = _crem(53 * l + 1, 169)
            if _crem(l * m, 64) >= 32:
                s = s + t
            t = 0.5 * t
        x[ii] = s
    return FloatState(x, C0 / M, R, S)
