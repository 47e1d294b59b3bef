import pytest

from quasigroups.core import QuasigroupTable, cyclic_table, direct_product

# Order-4 Latin square without identity; has the subquasigroup {0, 1} but is
# not associative.  Used as the standard asymmetric specimen throughout.
Q4_ROWS = [
    [0, 1, 2, 3],
    [1, 0, 3, 2],
    [3, 2, 1, 0],
    [2, 3, 0, 1],
]


@pytest.fixture
def z3():
    return cyclic_table(3)


@pytest.fixture
def q4():
    return QuasigroupTable(Q4_ROWS)


@pytest.fixture
def z5():
    return cyclic_table(5)


@pytest.fixture
def z6():
    return cyclic_table(6)


@pytest.fixture
def klein():
    return direct_product(cyclic_table(2), cyclic_table(2))
