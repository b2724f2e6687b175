from fractions import Fraction

import pytest
from hypothesis import settings

from hopflab import families as fam

settings.register_profile("default", max_examples=25, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def h4():
    return fam.sweedler()


@pytest.fixture(scope="session")
def e2():
    return fam.en_algebra(2)


@pytest.fixture(scope="session")
def kz2():
    return fam.z2()


@pytest.fixture
def half():
    return Fraction(1, 2)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
