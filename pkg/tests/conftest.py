import pytest

from ringprob import catalog, direct_product


@pytest.fixture(scope="session")
def e4():
    return catalog("E4")


@pytest.fixture(scope="session")
def tri22():
    return catalog("triangular", 2, 2)


@pytest.fixture(scope="session")
def tri32():
    return catalog("triangular", 3, 2)


@pytest.fixture(scope="session")
def m22():
    return catalog("full_matrix", 2, 2)


@pytest.fixture(scope="session")
def zero2():
    return catalog("zero_ring", 2)


@pytest.fixture(scope="session")
def zero5():
    return catalog("zero_ring", 5)


@pytest.fixture(scope="session")
def cyclic6():
    return catalog("cyclic_ring", 6)


@pytest.fixture(scope="session")
def e4_x_tri22(e4, tri22):
    return direct_product(e4, tri22)


@pytest.fixture(scope="session")
def noncommutative_rings(e4, tri22, tri32, m22):
    return [e4, tri22, tri32, m22]


@pytest.fixture(scope="session")
def catalog_rings(e4, tri22, tri32, m22, zero2, zero5, cyclic6):
    return [e4, tri22, tri32, m22, zero2, zero5, cyclic6]
