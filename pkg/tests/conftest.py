import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import pytest

from edepth.ring import ring


@pytest.fixture
def R2():
    return ring(32003, 2)


@pytest.fixture
def R3():
    return ring(32003, 3)


@pytest.fixture
def R4():
    return ring(32003, 4)
