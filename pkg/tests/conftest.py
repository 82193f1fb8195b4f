from pathlib import Path

import pytest

from bhcover.cover import validate
from bhcover.graphcover import fig2_example

DATA = Path(__file__).resolve().parent.parent / "data"

T01 = (1, 0, 2)
T12 = (0, 2, 1)


@pytest.fixture
def f5():
    return validate(0, 10, 3, c=[T01, T01] + [T12] * 8)


@pytest.fixture
def hyper():
    return validate(0, 6, 2, c=[(1, 0)] * 6)


@pytest.fixture
def fig2():
    return fig2_example()


@pytest.fixture
def data_dir():
    return DATA
