import sys

import pytest

from k3period import grassmann, k3_lattice, plane_from_basis
from k3period.sampling import rng_from_env

# Found once by sampling random integral planes; the enumeration certifies
# that no (-2)-vector is orthogonal to it.
SMOOTH_PLANE = [
    [4, -4, -5, 2, -1, 0, -5, -1, 2, -2, 4, 3, 2, 4, 2, -4, 36, 34, -4, -2, -4, 5],
    [3, 5, -2, 1, 1, 3, -4, 0, 2, 4, 2, -1, 0, -2, -4, -2, -4, -3, 36, 32, -4, -1],
    [-3, 2, 4, -5, 0, -1, 5, -1, -4, -3, 0, 1, -2, -1, 2, -2, 5, -3, 5, 4, 37, 35],
]


def u_row(i, x, y):
    row = [0] * 22
    row[16 + 2 * (i - 1)] = x
    row[16 + 2 * (i - 1) + 1] = y
    return row


@pytest.fixture
def rng():
    return rng_from_env()


@pytest.fixture(scope="session")
def K3():
    return k3_lattice()


@pytest.fixture(scope="session")
def P0():
    return grassmann.p0()


@pytest.fixture(scope="session")
def Q2():
    """The plane span{e1+2f1, e2+f2, e3+f3}."""
    return plane_from_basis([u_row(1, 1, 2), u_row(2, 1, 1), u_row(3, 1, 1)])


@pytest.fixture(scope="session")
def smooth_plane():
    return plane_from_basis(SMOOTH_PLANE)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
