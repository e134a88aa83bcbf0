import pytest
from tailscore.distribution import make_discrete


@pytest.fixture
def U4():
    return make_discrete([(1, .25), (2, .25), (3, .25), (4, .25)])


@pytest.fixture
def delta2():
    return make_discrete([(2, 1)])


@pytest.fixture
def two_point():
    """Uniform distribution on {0, 1}."""
    return make_discrete([(0, .5), (1, .5)])
