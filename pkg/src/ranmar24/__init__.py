"""RANMAR in exact 24-bit integer arithmetic with arbitrary jump-ahead."""

from .core import ArithState, FibState, Ranmar, RanmarState, next_f64, step, value_of
from .jump import jump_state, make_streams
from .polyring import PolyMod, parse_jump_count, pow_t_mod
from .seeding import init
from .state_io import StateFormatError, dumps, load, loads, save

__all__ = [
    "ArithState",
    "FibState",
    "PolyMod",
    "Ranmar",
    "RanmarState",
    "StateFormatError",
    "dumps",
    "init",
    "jump_state",
    "load",
    "loads",
    "make_streams",
    "next_f64",
    "parse_jump_count",
    "pow_t_mod",
    "save",
    "step",
    "value_of",
]

__version__ = "0.1.0"
