import numpy as np
import pytest
from hypothesis import strategies as st

from ranmar24.core import make_state
from ranmar24.float_reference import FloatState
from ranmar24.params import M, MOD, R, SCALE


def random_state(rng: np.random.Generator):
    i = int(rng.integers(1, R + 1))
    j = (i - 1 - 64) % R + 1
    lanes = rng.integers(0, M, size=R)
    return make_state(lanes, i, j, int(rng.integers(0, MOD)))


def float_twin(state) -> FloatState:
    return FloatState(state.fib.lane * SCALE, state.arith.v * SCALE, state.fib.i, state.fib.j)


@st.composite
def states(draw):
    lanes = draw(st.lists(st.integers(0, M - 1), min_size=R, max_size=R))
    i = draw(st.integers(1, R))
    v = draw(st.integers(0, MOD - 1))
    return make_state(lanes, i, (i - 1 - 64) % R + 1, v)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
