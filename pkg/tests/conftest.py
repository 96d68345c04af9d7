import pytest

from picaria.board import build_board
from picaria.solver import solve


@pytest.fixture(scope="session")
def spec34():
    return build_board(3, 4)


@pytest.fixture(scope="session")
def table34(spec34):
    return solve(spec34)


@pytest.fixture(scope="session")
def spec33():
    return build_board(3, 3)


@pytest.fixture(scope="session")
def table33(spec33):
    return solve(spec33)
