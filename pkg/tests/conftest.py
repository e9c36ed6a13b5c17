import pytest

from rittkit import Poly, field_of_order, make_field


def P(F, *coeffs):
    """Polynomial from coefficients listed low to high."""
    return Poly(F, coeffs)


@pytest.fixture(scope="session")
def F5():
    return make_field(5)


@pytest.fixture(scope="session")
def F7():
    return make_field(7)


@pytest.fixture(scope="session")
def F3():
    return make_field(3)


@pytest.fixture(scope="session")
def F2():
    return make_field(2)


@pytest.fixture(scope="session")
def F4():
    return field_of_order(4)
