"""Compiled bulk-generation loops.

Each kernel mutates the lane array in place and returns the updated
scalar part of the state ``(i, j, v)`` (or ``(i, j, c)`` for the float
loops). Cursors are 1-based, lanes are stored 0-based.

Cursors are cast to unsigned so the compiled index needs no negative
wrap-around check; the integer and float loops are otherwise line for line
the same shape.
"""

from numba import njit, uint64

from .params import MASK, MOD, SCALE, STEP_ADD

_SINK_MASK = 1023  # sink buffers have 1024 slots and stay cache resident


@njit(cache=True, nogil=True)
def int_u24(lane, i, j, v, out):
    one, top, i, j = uint64(1), uint64(97), uint64(i), uint64(j)
    for k in range(out.shape[0]):
        u = (lane[i - one] - lane[j - one]) & MASK
        lane[i - one] = u
        i -= one
        if i == 0:
            i = top
        j -= one
        if j == 0:
            j = top
        v += STEP_ADD
        if v >= MOD:
            v -= MOD
        out[k] = (u - v) & MASK
    return i, j, v


@njit(cache=True, nogil=True)
def int_f64(lane, i, j, v, out):
    one, top, i, j = uint64(1), uint64(97), uint64(i), uint64(j)
    for k in range(out.shape[0]):
        u = (lane[i - one] - lane[j - one]) & MASK
        lane[i - one] = u
        i -= one
        if i == 0:
            i = top
        j -= one
        if j == 0:
            j = top
        v += STEP_ADD
        if v >= MOD:
            v -= MOD
        out[k] = ((u - v) & MASK) * SCALE
    return i, j, v


@njit(cache=True, nogil=True)
def int_f64_sink(lane, i, j, v, n, sink):
    one, top, i, j = uint64(1), uint64(97), uint64(i), uint64(j)
    for k in range(n):
        u = (lane[i - one] - lane[j - one]) & MASK
        lane[i - one] = u
        i -= one
        if i == 0:
            i = top
        j -= one
        if j == 0:
            j = top
        v += STEP_ADD
        if v >= MOD:
            v -= MOD
        sink[k & _SINK_MASK] = ((u - v) & MASK) * SCALE
    return i, j, v


@njit(cache=True, nogil=True)
def float_f64(x, i, j, c, cd, cm, out):
    one, top, i, j = uint64(1), uint64(97), uint64(i), uint64(j)
    for k in range(out.shape[0]):
        y = x[i - one] - x[j - one]
        if y < 0.0:
            y += 1.0
        x[i - one] = y
        i -= one
        if i == 0:
            i = top
        j -= one
        if j == 0:
            j = top
        c -= cd
        if c < 0.0:
            c += cm
        y -= c
        if y < 0.0:
            y += 1.0
        out[k] = y
    return i, j, c


@njit(cache=True, nogil=True)
def float_f64_sink(x, i, j, c, cd, cm, n, sink):
    one, top, i, j = uint64(1), uint64(97), uint64(i), uint64(j)
    for k in range(n):
        y = x[i - one] - x[j - one]
        if y < 0.0:
            y += 1.0
        x[i - one] = y
        i -= one
        if i == 0:
            i = top
        j -= one
        if j == 0:
            j = top
        c -= cd
        if c < 0.0:
            c += cm
        y -= c
        if y < 0.0:
            y += 1.0
        sink[k & _SINK_MASK] = y
    return i, j, c


@njit(cache=True, nogil=True)
def _cdiv(a, b):
    # C++ integer division truncates toward zero
    q = abs(a) // abs(b)
    return q if (a >= 0) == (b > 0) else -q


@njit(cache=True, nogil=True)
def _crem(a, b):
    return a - b * _cdiv(a, b)


@njit(cache=True, nogil=True)
def seed_lanes(seed, lane):
    """Integer seeding loop with a 32-bit accumulator word."""
    ij = _cdiv(seed - 1, 30082)
    kl = seed - 1 - 30082 * ij
    i = _crem(_cdiv(ij, 177), 177) + 2
    j = _crem(ij, 177) + 2
    k = _crem(_cdiv(kl, 169), 178) + 1
    l = _crem(kl, 169)
    for ii in range(97):
        s = 0
        t = 1 << 31
        for jj in range(24):
            m = _crem(_crem(i * j, 179) * k, 179)
            i = j
            j = k
            k = m
            l = _crem(53 * l + 1, 169)
            if _crem(l * m, 64) >= 32:
                s += t
            t >>= 1
        lane[ii] = s >> 8
