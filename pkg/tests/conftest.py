import pytest

from silt.derived import DerivedCategory
from silt.quiver import parse_quiver


@pytest.fixture(scope="session")
def a2():
    return DerivedCategory(parse_quiver("A2"))


@pytest.fixture(scope="session")
def a3():
    return DerivedCategory(parse_quiver("A3:>>"))


@pytest.fixture(scope="session")
def a3_alt():
    return DerivedCategory(parse_quiver("A3:><"))


@pytest.fixture(scope="session")
def d4():
    return DerivedCategory(parse_quiver("D4"))
