import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hirschbundles.funcspace import RankFrequencyFunction, from_citation_counts


@pytest.fixture
def line():
    """f(x) = 10 - x on [0, 10]."""
    return RankFrequencyFunction([(0.0, 10.0), (10.0, 0.0)])


@pytest.fixture
def const4():
    """Constant 4 on [0, 8]."""
    return RankFrequencyFunction([(0.0, 4.0), (8.0, 4.0)])


@pytest.fixture
def counts_fixture():
    """The worked discrete record [10, 8, 5, 4, 3, 2, 1]."""
    return from_citation_counts([10, 8, 5, 4, 3, 2, 1])
