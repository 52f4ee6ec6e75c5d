"""Line-based text serialization of ``RanmarState``.

Layout::

    ranmar24 v1
    i <i> j <j>
    v <v>
    u 1 <lane[1]>
    ...
    u 97 <lane[97]>
"""

from __future__ import annotations

import os

from .core import RanmarState, check_state, make_state
from .params import R

HEADER = "ranmar24 v1"


class StateFormatError(ValueError):
    """Malformed or out-of-range serialized state."""


def dumps(state: RanmarState) -> str:
    check_state(state)
    lines = [HEADER, f"i {state.fib.i} j {state.fib.j}", f"v {state.arith.v}"]
    lines.extend(f"u {k} {int(x)}" for k, x in enumerate(state.fib.lane, start=1))
    return "\n".join(lines) + "\n"


def loads(text: str) -> RanmarState:
    lines = text.splitlines()
    if len(lines) != R + 3:
        raise StateFormatError(f"expected {R + 3} lines, got {len(lines)}")
    if lines[0].strip() != HEADER:
        raise StateFormatError(f"bad header {lines[0]!r}")
    try:
        tag_i, i, tag_j, j = lines[1].split()
        tag_v, v = lines[2].split()
        if (tag_i, tag_j, tag_v) != ("i", "j", "v"):
            raise StateFormatError("bad cursor or arithmetic-state line")
        lanes = []
        for k, line in enumerate(lines[3:], start=1):
            tag, idx, val = line.split()
            if tag != "u" or int(idx) != k:
                raise StateFormatError(f"expected lane {k}, got {line!r}")
            lanes.append(int(val))
        return make_state(lanes, int(i), int(j), int(v))
    except StateFormatError:
        raise
    except ValueError as exc:
        raise StateFormatError(str(exc)) from exc


def save(state: RanmarState, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dumps(state))


def load(path: str | os.PathLike) -> RanmarState:
    with open(path, encoding="ascii") as fh:
        return loads(fh.read())
