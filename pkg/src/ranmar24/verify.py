"""End-to-end self-test: integer vs float generator, jumps vs stepping,
and the polynomial kernel against slow oracles.

Polynomial functions are looked up through their module at call time so a
patched kernel is actually exercised.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass

import numpy as np

from . import float_reference, jump, oracles, polyring, seeding
from .core import Ranmar
from .params import SCALE

log = logging.getLogger(__name__)

SEEDS = (0, 1, 12345, 900_000_000)
JUMPS = (0, 1, 2, 33, 64, 97, 1000, 10_000)

# James (1990): seed pair ij=1802, kl=9373, outputs 20001..20006 times 2^24
KNOWN_ANSWER_SEED = 1802 * 30082 + 9373 + 1
KNOWN_ANSWER = (6533892, 14220222, 7275067, 6172232, 8354498, 10633180)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0


def first_mismatch(a, b) -> int | None:
    """Index of the first differing element (length mismatch counts)."""
    a = np.asarray(a)
    b = np.asarray(b)
    n = min(a.shape[0], b.shape[0])
    diff = np.flatnonzero(a[:n] != b[:n])
    if diff.size:
        return int(diff[0])
    return None if a.shape[0] == b.shape[0] else n


def _compare(a, b, what: str) -> str | None:
    k = first_mismatch(a, b)
    if k is None:
        return None
    return f"{what}: first divergence at index {k}"


def check_float_equivalence(n: int = 100_000, seeds=SEEDS) -> str | None:
    for seed in seeds:
        st = seeding.init(seed)
        fs = float_reference.init_float(seed)
        err = _compare(st.fib.lane * SCALE, fs.x, f"seed {seed} lanes")
        if err:
            return err
        ints = Ranmar(st).random(n)
        _, floats = float_reference.float_stream(fs, n)
        err = _compare(ints, floats, f"seed {seed} outputs")
        if err:
            return err
    return None


def check_known_answer() -> str | None:
    g = Ranmar.from_seed(KNOWN_ANSWER_SEED)
    g.u24_array(20_000)
    return _compare(g.u24_array(6), KNOWN_ANSWER, "published test vector")


def check_jump_vs_step(jumps=JUMPS, seed: int = 12345, n_out: int = 100) -> str | None:
    base = seeding.init(seed)
    longest = Ranmar(base).u24_array(max(jumps) + n_out)
    for J in jumps:
        got = Ranmar(jump.jump_state(base, J)).u24_array(n_out)
        err = _compare(got, longest[J : J + n_out], f"jump {J}")
        if err:
            return err
    return None


def check_jump_additivity(seed: int = 12345, n_out: int = 100) -> str | None:
    base = seeding.init(seed)
    J = 2**64 - 1
    twice = jump.jump_state(jump.jump_state(base, J), J)
    once = jump.jump_state(base, 2 * J)
    return _compare(
        Ranmar(twice).u24_array(n_out), Ranmar(once).u24_array(n_out), "2 x (2^64-1)"
    )


def check_streams(seed: int = 12345, block: int = 1000, n: int = 10) -> str | None:
    streams = jump.make_streams(seed, block, n)
    joined = np.concatenate([Ranmar(s).u24_array(block) for s in streams])
    return _compare(joined, Ranmar.from_seed(seed).u24_array(block * n), "streams")


def check_polynomials(max_j: int = 2000, n_random: int = 100, rng_seed: int = 2024) -> str | None:
    powers = oracles.t_powers(max_j + 1)
    for J, expected in enumerate(powers):
        err = _compare(polyring.pow_t_mod(J).coeffs, expected, f"t^{J}")
        if err:
            return err
    rng = np.random.default_rng(rng_seed)
    for trial in range(n_random):
        raw = rng.integers(0, 1 << 24, size=2 * polyring.R - 1)
        err = _compare(
            polyring.reduce_trinomial(raw).coeffs,
            oracles.long_division_remainder(raw),
            f"reduction trial {trial}",
        )
        if err:
            return err
    for trial in range(n_random // 5):
        j1, j2 = (int.from_bytes(rng.bytes(17), "little") >> 6 for _ in range(2))
        lhs = polyring.pow_t_mod(j1 + j2)
        rhs = polyring.mul_mod(polyring.pow_t_mod(j1), polyring.pow_t_mod(j2))
        err = _compare(lhs.coeffs, rhs.coeffs, f"additivity trial {trial}")
        if err:
            return err
    return None


CHECKS = {
    "float-equivalence": check_float_equivalence,
    "known-answer": check_known_answer,
    "jump-vs-step": check_jump_vs_step,
    "jump-additivity": check_jump_additivity,
    "streams": check_streams,
    "polynomial-oracles": check_polynomials,
}


def run_selftest() -> list[CheckResult]:
    results = []
    for name, check in CHECKS.items():
        t0 = time.perf_counter()
        try:
            err = check()
        except Exception as exc:  # a crash is a failure, not an abort
            log.exception("check %s raised", name)
            err = f"{type(exc).__name__}: {exc}"
        results.append(
            CheckResult(name, err is None, err or "", time.perf_counter() - t0)
        )
    return results
