"""
Shared fixtures.
"""

import pytest

from quadric_lattices.core.constants import Side
from quadric_lattices.lattice.space import make_space


@pytest.fixture
def Z2():
    return make_space(2, Side.ZSIDE)


@pytest.fixture
def X2():
    return make_space(2, Side.XSIDE)


@pytest.fixture
def Z4():
    return make_space(4, Side.ZSIDE)


@pytest.fixture
def X4():
    return make_space(4, Side.XSIDE)
