import pytest

from fibgf.poset import build_poset


@pytest.fixture(scope="session")
def poset13():
    """The triangle poset to rank 13, shared across poset tests."""
    return build_poset(13)
