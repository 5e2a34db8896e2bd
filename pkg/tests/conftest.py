import pytest

from mfk.corpus import corpus
from mfk.lattice import FlatLattice

DELA3_ROWS = [[1, 0, 0, 1, 1], [0, 1, 0, -1, 0], [0, 0, 1, 0, -1]]
U24_ROWS = [[1, 0, 1, 1], [0, 1, -1, 1]]


@pytest.fixture(scope="session")
def dela3():
    return corpus("delA3")


@pytest.fixture(scope="session")
def u24():
    return corpus("u24")


@pytest.fixture(scope="session")
def braid_k4():
    return corpus("braidK4")


@pytest.fixture(scope="session")
def dela3_lattice(dela3):
    return FlatLattice(dela3.matroid)


@pytest.fixture(scope="session")
def u24_lattice(u24):
    return FlatLattice(u24.matroid)


@pytest.fixture(scope="session")
def braid_k4_lattice(braid_k4):
    return FlatLattice(braid_k4.matroid)
