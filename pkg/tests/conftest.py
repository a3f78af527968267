import random

import pytest

from char2sl.fields import parse_field


@pytest.fixture(scope="session")
def F2():
    return parse_field("gf2")


@pytest.fixture(scope="session")
def F4():
    return parse_field("gf2e:r=2")


@pytest.fixture(scope="session")
def F8():
    return parse_field("gf2e:r=3")


@pytest.fixture(scope="session")
def K2():
    """F_2(x)."""
    return parse_field("ratfunc:q=2")


@pytest.fixture
def rng():
    return random.Random(1234)


def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance lines after the run so they survive output capture."""
    import sys

    mod = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
