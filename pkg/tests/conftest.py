import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from hyperlat.formats import fixtures_dir  # noqa: E402
from hyperlat.isometry import inverse, new_isometry, power, reflection  # noqa: E402
from hyperlat.lattice import new_lattice  # noqa: E402

GRAM_U = [[0, 1], [1, 0]]
GRAM_P = [[1, 0], [0, -2]]
GRAM_UM1 = [[0, 1, 0], [1, 0, 0], [0, 0, -1]]
GRAM_PM1 = [[1, 0, 0], [0, -2, 0], [0, 0, -1]]
M_PELL = [[3, 4], [2, 3]]
M_SWAP = [[0, 1], [1, 0]]
M_PARA = [[1, 2, 2], [0, 1, 0], [0, 2, 1]]

settings.register_profile("default", deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def lat_u():
    return new_lattice(GRAM_U, [1, 1], "U")


@pytest.fixture(scope="session")
def lat_p():
    return new_lattice(GRAM_P, [1, 0], "P")


@pytest.fixture(scope="session")
def lat_um1():
    return new_lattice(GRAM_UM1, [1, 1, 0], "U_m1")


@pytest.fixture(scope="session")
def lat_pm1():
    return new_lattice(GRAM_PM1, [1, 0, 0], "P_m1")


@pytest.fixture(scope="session")
def pell(lat_p):
    return new_isometry(lat_p, M_PELL)


@pytest.fixture(scope="session")
def swap(lat_u):
    return new_isometry(lat_u, M_SWAP)


@pytest.fixture(scope="session")
def para(lat_um1):
    return new_isometry(lat_um1, M_PARA)


@pytest.fixture(scope="session")
def pell3(lat_pm1):
    return new_isometry(lat_pm1, [[3, 4, 0], [2, 3, 0], [0, 0, 1]])


@pytest.fixture(scope="session")
def pell3_conjugate(lat_pm1, pell3):
    s = reflection(lat_pm1, (1, 1, 1))
    return s @ pell3 @ s


@pytest.fixture(scope="session")
def involution3(lat_pm1):
    return new_isometry(lat_pm1, [[1, 0, 0], [0, 1, 0], [0, 0, -1]])


@pytest.fixture(scope="session")
def fixture_dir():
    return fixtures_dir()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


__all__ = ["inverse", "power"]
