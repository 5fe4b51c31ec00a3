import pytest

from finsemi.catalog import boolean_semiring, make_B, make_product


@pytest.fixture(scope="session")
def B():
    return boolean_semiring()


@pytest.fixture(scope="session")
def Z2():
    return make_B(2, 0)


@pytest.fixture(scope="session")
def B31():
    return make_B(3, 1)


@pytest.fixture(scope="session")
def B32():
    return make_B(3, 2)


@pytest.fixture(scope="session")
def B43():
    return make_B(4, 3)


@pytest.fixture(scope="session")
def BxB(B):
    return make_product([B, B])
