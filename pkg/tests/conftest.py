import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from weightsys.engine import GL, SO, WeightSystem
from weightsys.perm import Permutation

settings.register_profile(
    "default",
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def permutations(draw, min_size=1, max_size=6):
    m = draw(st.integers(min_size, max_size))
    return Permutation(tuple(draw(st.permutations(range(1, m + 1)))))


@pytest.fixture(scope="session")
def wgl():
    return WeightSystem(GL)


@pytest.fixture(scope="session")
def wso():
    return WeightSystem(SO)
