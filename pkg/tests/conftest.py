import pytest

from example_data import A_ROWS, B_ROWS
from mmpx import worked
from mmpx.tropical import TropicalMatrix


@pytest.fixture
def ex_sys():
    return worked.system()


@pytest.fixture
def ex_x0():
    return worked.START


@pytest.fixture
def ex_A():
    return TropicalMatrix.from_rows(A_ROWS)


@pytest.fixture
def ex_B():
    return TropicalMatrix.from_rows(B_ROWS)
