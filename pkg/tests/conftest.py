import pytest

from paretoprobe import ConeUnionOracle, SearchSpace

from support import GOLDEN_BOUNDS, GOLDEN_GENERATORS


@pytest.fixture
def golden_space():
    return SearchSpace(GOLDEN_BOUNDS)


@pytest.fixture
def golden_oracle():
    return ConeUnionOracle(GOLDEN_GENERATORS)
