import numpy as np
import pytest

from ctqw import build_graph, make_entry, stratify

PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
]


@pytest.fixture
def petersen():
    return build_graph(10, PETERSEN_EDGES)


@pytest.fixture
def petersen_strat(petersen):
    return stratify(petersen, 0)


@pytest.fixture
def petersen_entry():
    return make_entry("petersen")


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
