import pytest

from pybicorn.projection import projection_fixture
from pybicorn.surface.generators import generate_family

# Curve 0 is α and curve 1 is β in every pattern; triple-k adds δ = 2.

@pytest.fixture(scope="session")
def fix_t2():
    """Genus-2 surface, α and β meeting twice."""
    return generate_family("genus2-i2")

@pytest.fixture(scope="session")
def fix_n():
    """Non-orientable surface, α and β meeting three times with a twisted neighborhood."""
    return generate_family("figure1")

@pytest.fixture(scope="session")
def fix_p():
    return projection_fixture()

@pytest.fixture(scope="session")
def grid():
    cache = {}
    def make(k):
        if k not in cache:
            cache[k] = generate_family("grid-%d" %k)
        return cache[k]
    return make
