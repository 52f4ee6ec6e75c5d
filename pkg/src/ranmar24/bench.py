"""Timing harness: integer vs floating-point generation, and jump cost."""

from __future__ import annotations

import os
import platform
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field

import numpy as np

from . import _kernels, float_reference
from .jump import jump_state
from .polyring import pow_t_mod
from .seeding import init

DEFAULT_COUNT = 10**8
DEFAULT_JUMPS = (2**64 - 1, 2**120 - 1)


@dataclass
class JumpTiming:
    J: str
    bits: int
    pow_t_mod_seconds: float
    jump_state_seconds: float


@dataclass
class BenchReport:
    machine: str
    count: int
    repeats: int
    integer_seconds: float
    float_seconds: float
    ratio: float
    jumps: list[JumpTiming] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def machine_label() -> str:
    return f"{platform.node()} {platform.machine()} {platform.processor() or platform.system()}".strip()


@contextmanager
def pinned_to_one_cpu():
    """Keep the timing loops on a single CPU where the OS allows it."""
    saved = None
    if hasattr(os, "sched_setaffinity"):
        try:
            saved = os.sched_getaffinity(0)
            os.sched_setaffinity(0, {min(saved)})
        except OSError:
            saved = None
    try:
        yield
    finally:
        if saved is not None:
            os.sched_setaffinity(0, saved)


def time_integer(n: int, seed: int = 12345) -> float:
    st = init(seed)
    lane = st.fib.lane.copy()
    sink = np.empty(1024, dtype=np.float64)
    t0 = time.perf_counter()
    _kernels.int_f64_sink(lane, st.fib.i, st.fib.j, st.arith.v, n, sink)
    return time.perf_counter() - t0


def time_float(n: int, seed: int = 12345) -> float:
    fs = float_reference.init_float(seed)
    x = fs.x.copy()
    sink = np.empty(1024, dtype=np.float64)
    t0 = time.perf_counter()
    _kernels.float_f64_sink(x, fs.i, fs.j, fs.c, float_reference.CD, float_reference.CM, n, sink)
    return time.perf_counter() - t0


def generation_times(n: int, repeats: int = 5) -> tuple[float, float]:
    """Best-of-``repeats`` seconds for ``n`` draws, (integer, float)."""
    # compile both loops before timing
    time_integer(10)
    time_float(10)
    ti, tf = [], []
    for _ in range(repeats):
        ti.append(time_integer(n))
        tf.append(time_float(n))
    return min(ti), min(tf)


def jump_times(J: int, repeats: int = 3, seed: int = 12345) -> JumpTiming:
    st = init(seed)
    tp, tj = [], []
    for _ in range(repeats):
        t0 = time.perf_counter()
        pow_t_mod(J)
        tp.append(time.perf_counter() - t0)
        t0 = time.perf_counter()
        jump_state(st, J)
        tj.append(time.perf_counter() - t0)
    return JumpTiming(str(J), J.bit_length(), min(tp), min(tj))


def run_bench(count: int = DEFAULT_COUNT, jumps=DEFAULT_JUMPS, repeats: int = 5) -> BenchReport:
    with pinned_to_one_cpu():
        ti, tf = generation_times(count, repeats)
        report = BenchReport(machine_label(), count, repeats, ti, tf, tf / ti)
        report.jumps = [jump_times(J, repeats) for J in jumps]
    return report
