import pytest

from eqdomain import enumerate_tables


@pytest.fixture(scope="session")
def semigroups_le3():
    """All 122 semigroups of order <= 3, in enumeration order."""
    return [S for n in (1, 2, 3) for S in enumerate_tables(n)]


@pytest.fixture(scope="session")
def semigroups_order4():
    return list(enumerate_tables(4))
