import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from snrkit.construct import example_L, example_S, left_zero_T, two_semilattice_L  # noqa: E402
from snrkit.core import make_seminearring  # noqa: E402
from snrkit.tables import make_table  # noqa: E402

U, A, B, C = range(4)


@pytest.fixture(scope="session")
def T():
    return left_zero_T()


@pytest.fixture(scope="session")
def L():
    return two_semilattice_L()


@pytest.fixture(scope="session")
def trivial():
    return make_seminearring(make_table(1, [0]), make_table(1, [0]))


@pytest.fixture(scope="session")
def S2():
    return example_S(2)


@pytest.fixture(scope="session")
def L2():
    return example_L(2)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
