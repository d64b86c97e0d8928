import pytest

from cactus_mis import load_catalog


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()
