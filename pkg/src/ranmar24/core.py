"""Integer RANMAR: state types, the single-step transition and bulk streams.

Lanes hold 24-bit residues ``x * 2^24`` of the floating-point generator and
are kept fully reduced after every write. The arithmetic component stores
the numerator ``c * 2^24`` modulo ``2^24 - 3``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .params import C0, M, MASK, MOD, R, S, SCALE, STEP_ADD

LAG_GAP = R - S  # constant separation of the two cursors


@dataclass
class FibState:
    """Lagged Fibonacci lanes plus the two descending 1-based cursors."""

    lane: np.ndarray
    i: int = R
    j: int = S

    def copy(self) -> FibState:
        return FibState(self.lane.copy(), self.i, self.j)

    def __eq__(self, other):
        if not isinstance(other, FibState):
            return NotImplemented
        return (self.i, self.j) == (other.i, other.j) and np.array_equal(
            self.lane, other.lane
        )


@dataclass
class ArithState:
    v: int = C0


@dataclass
class RanmarState:
    fib: FibState
    arith: ArithState

    def copy(self) -> RanmarState:
        return RanmarState(self.fib.copy(), ArithState(self.arith.v))


def make_state(lanes, i: int = R, j: int = S, v: int = C0) -> RanmarState:
    """Build and validate a state from 97 lane residues (lane 1 first)."""
    lane = np.array([int(x) for x in lanes], dtype=np.int64)
    state = RanmarState(FibState(lane, int(i), int(j)), ArithState(int(v)))
    check_state(state)
    return state


def check_state(state: RanmarState) -> None:
    """Raise ``ValueError`` unless every state invariant holds."""
    fib = state.fib
    lane = np.asarray(fib.lane)
    if lane.shape != (R,):
        raise ValueError(f"expected {R} lanes, got shape {lane.shape}")
    if lane.min() < 0 or lane.max() > MASK:
        raise ValueError("lane value outside [0, 2^24)")
    if not (1 <= fib.i <= R and 1 <= fib.j <= R):
        raise ValueError(f"cursor out of range: i={fib.i} j={fib.j}")
    if (fib.i - fib.j) % R != LAG_GAP:
        raise ValueError(f"cursors i={fib.i} j={fib.j} are not {LAG_GAP} apart")
    if not 0 <= state.arith.v < MOD:
        raise ValueError(f"arithmetic state {state.arith.v} outside [0, {MOD})")


def value_of(u24: int) -> float:
    """Map a 24-bit residue to the dyadic fraction ``u24 / 2^24``."""
    if not 0 <= u24 < M:
        raise ValueError(f"residue {u24} outside [0, 2^24)")
    return u24 * SCALE


def step(state: RanmarState) -> tuple[RanmarState, int]:
    """Advance one call; returns the new state and the 24-bit output.

    The input state is left untouched.
    """
    new = state.copy()
    out = _advance(new)
    return new, out


def next_f64(state: RanmarState) -> tuple[RanmarState, float]:
    new, out = step(state)
    return new, out * SCALE


def _advance(state: RanmarState) -> int:
    # in-place single step, shared by the pure and the stateful API
    fib = state.fib
    lane, i, j = fib.lane, fib.i, fib.j
    u = (int(lane[i - 1]) - int(lane[j - 1])) & MASK
    lane[i - 1] = u
    i -= 1
    if i == 0:
        i = R
    j -= 1
    if j == 0:
        j = R
    fib.i, fib.j = i, j
    v = state.arith.v + STEP_ADD
    if v >= MOD:
        v -= MOD
    state.arith.v = v
    return (u - v) & MASK


class Ranmar:
    """Stateful RANMAR stream.

    Single outputs go through the Python step; arrays go through a compiled
    loop. Both advance the same state, so calls may be freely interleaved.

    >>> g = Ranmar.from_seed(12345)
    >>> x = g.uniform()
    >>> 0.0 <= x < 1.0
    True
    """

    def __init__(self, state: RanmarState):
        check_state(state)
        self._state = state.copy()

    @classmethod
    def from_seed(cls, seed: int) -> Ranmar:
        from .seeding import init

        return cls(init(seed))

    @property
    def state(self) -> RanmarState:
        return self._state.copy()

    def u24(self) -> int:
        return _advance(self._state)

    def uniform(self) -> float:
        return _advance(self._state) * SCALE

    def u24_array(self, n: int) -> np.ndarray:
        out = np.empty(int(n), dtype=np.int64)
        self._run(_kernels.int_u24, out)
        return out

    def random(self, n: int) -> np.ndarray:
        out = np.empty(int(n), dtype=np.float64)
        self._run(_kernels.int_f64, out)
        return out

    def jump(self, count: int) -> None:
        """Skip ``count`` outputs without generating them."""
        from .jump import jump_state

        self._state = jump_state(self._state, count)

    def _run(self, kernel, out):
        st = self._state
        i, j, v = kernel(st.fib.lane, st.fib.i, st.fib.j, st.arith.v, out)
        st.fib.i, st.fib.j, st.arith.v = int(i), int(j), int(v)
