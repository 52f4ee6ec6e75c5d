"""Polynomials over Z/2^eZ reduced modulo the trinomial t^97 + t^64 - 1.

``pow_t_mod(J)`` gives the remainder of t^J, whose coefficients drive the
jump-ahead. Multiplication is schoolbook (``np.convolve``) followed by an
O(r) fold of the high half using t^97 = 1 - t^64.

For e <= 24 coefficients live in int64: a product of two reduced
coefficients is below 2^48 and a full convolution sum stays below 2^55, so
no intermediate masking is needed. Wider e falls back to Python ints.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .params import E, R, S

LOW = R - S  # 64, the middle exponent of the modulus
MAX_RAW_DEGREE = 2 * (R - 1)

_INT64_MAX_E = 24


def _dtype(e: int):
    return np.int64 if e <= _INT64_MAX_E else object


def _mask(e: int) -> int:
    return (1 << e) - 1


@dataclass(frozen=True, eq=False)
class PolyMod:
    """A reduced polynomial: ``coeffs[k]`` is the coefficient of t^k."""

    coeffs: np.ndarray
    e: int = E

    def __post_init__(self):
        c = self.coeffs
        if c.shape != (R,):
            raise ValueError(f"expected {R} coefficients, got shape {c.shape}")
        c.flags.writeable = False

    @classmethod
    def from_coeffs(cls, coeffs, e: int = E) -> PolyMod:
        mask = _mask(e)
        c = np.zeros(R, dtype=_dtype(e))
        vals = [int(x) & mask for x in coeffs]
        if len(vals) > R:
            raise ValueError(f"degree {len(vals) - 1} not reduced (must be < {R})")
        c[: len(vals)] = vals
        return cls(c, e)

    @classmethod
    def monomial(cls, k: int, e: int = E) -> PolyMod:
        """t^k for ``0 <= k < 97``."""
        c = [0] * (k + 1)
        c[k] = 1
        return cls.from_coeffs(c, e)

    @classmethod
    def one(cls, e: int = E) -> PolyMod:
        return cls.monomial(0, e)

    def __eq__(self, other):
        if not isinstance(other, PolyMod):
            return NotImplemented
        return self.e == other.e and all(
            int(a) == int(b) for a, b in zip(self.coeffs, other.coeffs)
        )

    def __add__(self, other: PolyMod) -> PolyMod:
        _same_ring(self, other)
        return PolyMod((self.coeffs + other.coeffs) & _mask(self.e), self.e)

    def __mul__(self, other: PolyMod) -> PolyMod:
        return mul_mod(self, other)

    def to_list(self) -> list[int]:
        return [int(x) for x in self.coeffs]


def _same_ring(a: PolyMod, b: PolyMod) -> None:
    if a.e != b.e:
        raise ValueError(f"mixed precisions e={a.e} and e={b.e}")


def reduce_trinomial(c, e: int = E) -> PolyMod:
    """Reduce a raw coefficient array of degree <= 192 modulo t^97 + t^64 - 1.

    Each term c_k t^k with k >= 97 is rewritten as c_k t^(k-97) - c_k t^(k-33).
    Folding the whole high block at once takes three rounds from degree 192.
    """
    mask = _mask(e)
    c = np.asarray(c)
    if c.ndim != 1:
        raise ValueError("coefficient array must be one-dimensional")
    if c.shape[0] > MAX_RAW_DEGREE + 1:
        raise ValueError(f"degree {c.shape[0] - 1} exceeds {MAX_RAW_DEGREE}")
    work = c.astype(_dtype(e)) & mask
    while work.shape[0] > R:
        high = work[R:]
        n = high.shape[0]
        out = np.zeros(max(R, LOW + n), dtype=work.dtype)
        out[:R] = work[:R]
        out[:n] += high
        out[LOW : LOW + n] -= high
        work = out & mask
    if work.shape[0] < R:
        work = np.concatenate([work, np.zeros(R - work.shape[0], dtype=work.dtype)])
    return PolyMod(work, e)


def mul_mod(a: PolyMod, b: PolyMod) -> PolyMod:
    _same_ring(a, b)
    return reduce_trinomial(np.convolve(a.coeffs, b.coeffs), a.e)


def mul_t(a: PolyMod) -> PolyMod:
    """Multiply by t: shift up one degree and fold the single overflow term."""
    mask = _mask(a.e)
    c = np.empty(R, dtype=a.coeffs.dtype)
    c[1:] = a.coeffs[:-1]
    top = a.coeffs[-1]
    c[0] = top
    c[LOW] = (c[LOW] - top) & mask
    return PolyMod(c, a.e)


def pow_t_mod(J: int, e: int = E) -> PolyMod:
    """t^J mod (t^97 + t^64 - 1) by left-to-right square-and-multiply."""
    J = check_jump_count(J)
    acc = PolyMod.one(e)
    for bit in bin(J)[2:] if J else "":
        acc = mul_mod(acc, acc)
        if bit == "1":
            acc = mul_t(acc)
    return acc


def check_jump_count(J) -> int:
    if isinstance(J, bool) or not isinstance(J, (int, np.integer)):
        raise TypeError(f"jump count must be an integer, got {type(J).__name__}")
    J = int(J)
    if J < 0:
        raise ValueError(f"jump count must be nonnegative, got {J}")
    return J


_POW_FORM = re.compile(r"^2\^(\d+)(?:([+-])(\d+))?$")


def parse_jump_count(text: str) -> int:
    """Parse a decimal literal or one of ``2^k``, ``2^k-1``, ``2^k+1``.

    >>> parse_jump_count("2^64-1") == 2**64 - 1
    True
    """
    s = text.strip().replace("_", "").replace(" ", "")
    if s.isdigit():
        return int(s)
    m = _POW_FORM.match(s)
    if m is None or (m.group(3) is not None and m.group(3) != "1"):
        raise ValueError(f"unrecognised jump count {text!r}")
    value = 1 << int(m.group(1))
    if m.group(2) == "+":
        value += 1
    elif m.group(2) == "-":
        value -= 1
    return value
