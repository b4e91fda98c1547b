import pytest
from hypothesis import settings

from zerofull.cantor import CantorParams

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@pytest.fixture
def middle_thirds():
    return CantorParams(3, [0, 2])


@pytest.fixture
def five_one_two():
    """C(5, {1, 2}): misses both ends of [0, 1]."""
    return CantorParams(5, [1, 2])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
