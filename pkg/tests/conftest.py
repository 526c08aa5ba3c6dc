import random

import pytest

from knotflype import parse_pd
from knotflype.builders import pretzel, twist_closure
from knotflype.tables import load_table

TREFOIL_PD = "X(3,6,4,1) X(5,2,6,3) X(1,4,2,5)"
FIG8_PD = "X(8,6,1,5) X(4,2,5,1) X(2,7,3,8) X(6,3,7,4)"


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL_PD)


@pytest.fixture
def fig8():
    return parse_pd(FIG8_PD)


@pytest.fixture
def p2131():
    return pretzel(2, 1, 3, 1)


@pytest.fixture
def torus25():
    return twist_closure(5)


@pytest.fixture
def table():
    return load_table()


def random_dart_perm(rng: random.Random, num_darts: int) -> list[int]:
    perm = list(range(num_darts))
    rng.shuffle(perm)
    return perm
