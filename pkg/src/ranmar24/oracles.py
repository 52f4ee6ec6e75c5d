"""Slow, independent reference computations used by the self-test and tests.

Nothing here shares code paths with the fast implementations it checks:
division is general long division by the full modulus polynomial, and
stepping uses plain Python integers.
"""

from __future__ import annotations

from .params import MASK, R, S

# t^97 + t^64 - 1, lowest degree first, with -1 written as a residue later
PHI = {0: -1, R - S: 1, R: 1}


def long_division_remainder(raw, e: int = 24) -> list[int]:
    """Remainder of ``sum raw[k] t^k`` divided by the monic modulus, mod 2^e."""
    mask = (1 << e) - 1
    rem = [int(x) & mask for x in raw]
    phi = [0] * (R + 1)
    for k, c in PHI.items():
        phi[k] = c & mask
    for top in range(len(rem) - 1, R - 1, -1):
        q = rem[top]
        if q == 0:
            continue
        shift = top - R
        for k, c in enumerate(phi):
            if c:
                rem[shift + k] = (rem[shift + k] - q * c) & mask
    rem = rem[:R] + [0] * max(0, R - len(rem))
    return rem


def t_powers(count: int, e: int = 24) -> list[list[int]]:
    """t^0, t^1, ..., t^(count-1) mod phi, one multiplication by t at a time.

    Multiplying by t shifts every coefficient up; the overflowing t^97 term
    is replaced using long division by the full modulus.
    """
    acc = [1] + [0] * (R - 1)
    out = []
    for _ in range(count):
        out.append(acc)
        acc = long_division_remainder([0] + acc, e)
    return out


def lagged_sequence(u, n: int) -> list[int]:
    """Extend ``u_1..u_97`` by ``u_n = u_(n-97) - u_(n-33) mod 2^24``, n more terms."""
    seq = [int(x) for x in u]
    for _ in range(n):
        k = len(seq)
        seq.append((seq[k - R] - seq[k - S]) & MASK)
    return seq


def stepped_outputs(state, n: int) -> list[int]:
    """``n`` 24-bit outputs by repeated single steps (the state is not mutated)."""
    from .core import step

    out = []
    for _ in range(n):
        state, y = step(state)
        out.append(y)
    return out
