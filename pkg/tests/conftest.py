import random

import pytest

from quadric_sheaves.sheaf import Presentation


def gen(source, target, seed):
    return Presentation.generic(source, target, seed=seed, locally_free=True)


@pytest.fixture(scope="session")
def A():
    """Rank 2, c1 = (1,1), c2 = 2: coker(O(-1,-1) -> O^3)."""
    return gen([(-1, -1)], [(0, 0)] * 3, 11)


@pytest.fixture(scope="session")
def A_other():
    return gen([(-1, -1)], [(0, 0)] * 3, 12)


@pytest.fixture(scope="session")
def T():
    """Rank 3, c1 = (1,1): coker(O(-1,-1) -> O^4)."""
    return gen([(-1, -1)], [(0, 0)] * 4, 13)


@pytest.fixture(scope="session")
def max22():
    return gen([(-2, -2)], [(0, 0)] * 3, 14)


@pytest.fixture(scope="session")
def max12():
    return gen([(-1, -2)], [(0, 0)] * 3, 15)


@pytest.fixture(scope="session")
def idx10():
    """Rank 2, c1 = (2,2), c2 = 6, index (1,0)."""
    return gen([(-1, -2)], [(0, 0), (0, 0), (1, 0)], 16)


@pytest.fixture
def rng():
    return random.Random(2024)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
