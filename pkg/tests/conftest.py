import pytest

from semimorph import SImage, make_semiring

GOLDEN_F = [[0, 1, 0], [0, 0, 1], [1, 1, 0]]
GOLDEN_G = [[0, 1, 0], [1, 0, 0], [0, 0, 0]]
GOLDEN_FG = [
    [0, 0, 1, 0, 0],
    [0, 1, 0, 1, 0],
    [0, 1, 1, 0, 0],
    [1, 1, 0, 0, 0],
    [0, 0, 0, 0, 0],
]


@pytest.fixture
def boolean():
    return make_semiring("boolean")


@pytest.fixture
def maxplus():
    return make_semiring("maxplus")


@pytest.fixture
def minmax():
    return make_semiring("minmax")


@pytest.fixture
def counting():
    return make_semiring("counting")


@pytest.fixture
def golden_f():
    return SImage.from_values(GOLDEN_F, "boolean")


@pytest.fixture
def golden_g():
    return SImage.from_values(GOLDEN_G, "boolean")


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
