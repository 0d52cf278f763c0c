import random

import pytest
from hypothesis import settings

from golodlab.complex_core import from_facets

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def four_cycle():
    return from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])


@pytest.fixture
def rng():
    return random.Random(20261016)
