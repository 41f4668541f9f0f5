import pytest

from affine_fc.coxeter import build_graph, element
from affine_fc.model import Family
from affine_fc.oracle import fc_elements


@pytest.fixture(scope="session")
def d4():
    return build_graph(Family.AFFINE_D, 2)


@pytest.fixture(scope="session")
def d5():
    return build_graph(Family.AFFINE_D, 3)


@pytest.fixture(scope="session")
def d7():
    return build_graph(Family.AFFINE_D, 5)


@pytest.fixture(scope="session")
def b3():
    return build_graph(Family.AFFINE_B, 2)


@pytest.fixture(scope="session")
def b6():
    return build_graph(Family.AFFINE_B, 5)


@pytest.fixture(scope="session")
def d4_elements(d4):
    return fc_elements(d4, 7)


@pytest.fixture(scope="session")
def d5_elements(d5):
    return fc_elements(d5, 6)


@pytest.fixture(scope="session")
def b3_elements(b3):
    return fc_elements(b3, 7)


@pytest.fixture(scope="session")
def w1(d7):
    """(0 4)(3 5)(2 4 6 7)(1) in D~7."""
    return element(d7, (0, 4, 3, 5, 2, 4, 6, 7, 1))


@pytest.fixture(scope="session")
def w2(b6):
    """(3)(2 4)(1 3 5)(2 4 6)(0 3 5)(2 6) in B~6."""
    return element(b6, (3, 2, 4, 1, 3, 5, 2, 4, 6, 0, 3, 5, 2, 6))
