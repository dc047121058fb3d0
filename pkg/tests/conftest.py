import sys

import numpy as np
import pytest
from hypothesis import strategies as st

from fueter.quaternion import Quaternion

floats = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)
quaternions = st.builds(Quaternion, floats, floats, floats, floats)
small = st.floats(min_value=-0.6, max_value=0.6, allow_nan=False, allow_infinity=False)
ball_quaternions = st.builds(Quaternion, small, small, small, small).filter(lambda q: abs(q) < 0.95)
fractions = st.fractions(min_value=-5, max_value=5, max_denominator=12)
exact_quaternions = st.builds(Quaternion, fractions, fractions, fractions, fractions)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def close(a, b, tol):
    return abs((Quaternion.coerce(a) - Quaternion.coerce(b)).to_float()) <= tol


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.LINES):
        for line in mod.LINES[n]:
            terminalreporter.write_line(line)
