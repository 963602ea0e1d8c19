import math

import numpy as np
import pytest

# closed-form roots u +- sqrt(u^2 - 1), sorted descending
KLEMES_X = (3.5 + math.sqrt(11.25), 1.0, 1.0, 3.5 - math.sqrt(11.25))
KLEMES_Y = (3 + math.sqrt(8), 1.5 + math.sqrt(1.25), 1.5 - math.sqrt(1.25), 3 - math.sqrt(8))


@pytest.fixture
def klemes_x():
    return KLEMES_X


@pytest.fixture
def klemes_y():
    return KLEMES_Y


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# filled by test_acceptance.py, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
