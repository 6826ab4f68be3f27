import pytest

from singres import DualGraph
from singres.catalog import a_n, cusp3, d_n, e_n, simple_elliptic


@pytest.fixture
def a1():
    return a_n(1)


@pytest.fixture
def d4():
    return d_n(4)


@pytest.fixture
def e8():
    return e_n(8)


@pytest.fixture
def cusp():
    return cusp3()


@pytest.fixture
def double_edge():
    return DualGraph.from_lists([-2, -2], [(0, 1), (0, 1)])


@pytest.fixture
def se():
    return simple_elliptic


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
