import pytest

from hullcraft.field import tower_for_q

# GF(9) = GF(3)[i]/(i^2 + 1); element a + b*i is encoded as a + 3b.
I = 3
ONE_PLUS_I = 4


@pytest.fixture(scope="session")
def gf9():
    return tower_for_q(3)


@pytest.fixture(scope="session")
def gf16():
    return tower_for_q(4)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number])
