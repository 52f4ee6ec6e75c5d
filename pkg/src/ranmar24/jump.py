"""Exact jump-ahead for RANMAR and block partitioning into streams.

The lagged Fibonacci part is linear over Z/2^24Z: in canonical order
``u = (u_1, ..., u_97)`` one step is ``u -> (u_2, ..., u_97, u_1 - u_65)``,
i.e. multiplication by the companion matrix A of t^97 + t^64 - 1. A J-step
jump is ``u P_J(A)`` with ``P_J = t^J mod phi``, evaluated by Horner so only
one accumulator vector is needed. The arithmetic part jumps in closed form.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .core import LAG_GAP, ArithState, FibState, RanmarState
from .params import D0, MASK, MOD, R, S
from .polyring import check_jump_count, pow_t_mod
from .seeding import init


def canonicalize(fib: FibState) -> np.ndarray:
    """Lanes in consumption order: entry 0 is the next ``lane[i]`` read.

    Reading descends from cursor ``i`` with wrap-around, so the k-th entry
    is ``lane[i - k]`` (1-based, cyclic). Entry 64 is then ``lane[j]``.
    """
    idx = (fib.i - 1 - np.arange(R)) % R
    return fib.lane[idx].copy()


def decanonicalize(u: np.ndarray) -> FibState:
    """Install a canonical vector with fresh cursors ``i = 97, j = 33``."""
    u = np.asarray(u, dtype=np.int64)
    if u.shape != (R,):
        raise ValueError(f"expected {R} entries, got shape {u.shape}")
    return FibState(u[::-1].copy(), R, S)


def apply_A(u: np.ndarray) -> np.ndarray:
    """One lagged Fibonacci step in canonical order."""
    out = np.empty(R, dtype=np.int64)
    out[:-1] = u[1:]
    out[-1] = (u[0] - u[LAG_GAP]) & MASK
    return out


def jump_fib(u: np.ndarray, J: int) -> np.ndarray:
    """``F^J(u)`` via Horner evaluation of ``u P_J(A)``."""
    u = np.asarray(u, dtype=np.int64)
    b = pow_t_mod(J).coeffs
    acc = (b[R - 1] * u) & MASK
    for k in range(R - 2, -1, -1):
        shifted = np.empty(R, dtype=np.int64)
        shifted[:-1] = acc[1:]
        shifted[-1] = acc[0] - acc[LAG_GAP]
        acc = (shifted + b[k] * u) & MASK
    return acc


def jump_arith(arith: ArithState, J: int) -> ArithState:
    """Closed-form jump of the arithmetic sequence; only ``J mod m`` matters."""
    J = check_jump_count(J)
    dec = (J % MOD) * D0 % MOD
    return ArithState((arith.v + MOD - dec) % MOD)


def jump_state(state: RanmarState, J: int) -> RanmarState:
    """State whose n-th output is the (J + n)-th output of ``state``."""
    J = check_jump_count(J)
    if J == 0:
        return state.copy()
    fib = decanonicalize(jump_fib(canonicalize(state.fib), J))
    return RanmarState(fib, jump_arith(state.arith, J))


def make_streams(
    seed: int,
    block_length: int,
    n_streams: int,
    *,
    independent: bool = False,
    workers: int | None = None,
) -> list[RanmarState]:
    """Starting states of ``n_streams`` consecutive blocks of one sequence.

    Stream k starts ``k * block_length`` outputs into the seeded sequence.
    By default each start is one jump from the previous one; with
    ``independent=True`` every start is jumped directly from the seed state,
    optionally on a thread pool of ``workers`` threads.
    """
    block_length = check_jump_count(block_length)
    if block_length < 1:
        raise ValueError("block_length must be at least 1")
    if isinstance(n_streams, bool) or int(n_streams) != n_streams or n_streams < 1:
        raise ValueError(f"n_streams must be a positive integer, got {n_streams!r}")
    n_streams = int(n_streams)
    base = init(seed)
    if independent:
        offsets = [k * block_length for k in range(n_streams)]
        if workers and workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                return list(pool.map(lambda J: jump_state(base, J), offsets))
        return [jump_state(base, J) for J in offsets]
    streams = [base]
    for _ in range(n_streams - 1):
        streams.append(jump_state(streams[-1], block_length))
    return streams
