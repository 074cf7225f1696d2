import pytest

from scottbench.enumeration import enumerate_posets


@pytest.fixture(scope="session")
def small_posets():
    """All canonical posets with up to 4 elements."""
    out = []
    for n in range(1, 5):
        out.extend(enumerate_posets(n))
    return out


@pytest.fixture(scope="session")
def posets_to_5(small_posets):
    return small_posets + list(enumerate_posets(5))
