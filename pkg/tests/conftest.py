import pytest

from cubical import fixtures


@pytest.fixture
def cub4():
    return fixtures.cub4()


@pytest.fixture
def one_way():
    return fixtures.one_way_pair()


@pytest.fixture
def swap():
    return fixtures.two_state_swap()


@pytest.fixture
def single_edge():
    return fixtures.single_edge_medium()


@pytest.fixture
def triangle():
    return fixtures.triangle()
