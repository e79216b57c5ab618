import random

import pytest

from seifert_semigroup import SeifertData, build_graph, ihs_from_alphas


@pytest.fixture
def sf_star70():
    """Six-vertex star: centre -1 with legs -5, -5, -7, -10, -70."""
    return SeifertData(1, ((5, 1), (5, 1), (7, 1), (10, 1), (70, 1)))


@pytest.fixture
def sf_base4():
    """Four-leg base whose (70)-augmentation is the six-vertex star."""
    return SeifertData(1, ((5, 1), (5, 1), (7, 1), (10, 1)))


@pytest.fixture
def sf_asym5():
    return SeifertData(1, ((4, 1), (4, 1), (4, 1), (10, 1), (40, 1)))


@pytest.fixture
def sf_gor7():
    return SeifertData(2, ((2, 1), (2, 1), (3, 1), (3, 1), (7, 1), (7, 1), (84, 1)))


@pytest.fixture
def sf_237():
    return ihs_from_alphas((2, 3, 7))


@pytest.fixture
def sf_e8():
    return ihs_from_alphas((2, 3, 5))


@pytest.fixture
def golden_graphs(sf_star70, sf_base4, sf_asym5, sf_gor7, sf_237):
    return {
        "star70": build_graph(sf_star70),
        "base4": build_graph(sf_base4),
        "asym5": build_graph(sf_asym5),
        "gor7": build_graph(sf_gor7),
        "s237": build_graph(sf_237),
    }


def seeded_rng(tag: int) -> random.Random:
    return random.Random(20260809 + tag)
