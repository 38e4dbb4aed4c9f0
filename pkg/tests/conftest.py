import pytest

from helpers import exhaustive_corpus, random_corpus, random_plane_corpus


@pytest.fixture(scope="session")
def small_corpus():
    """Every rotation system with <= 2 vertices, <= 4 edges, all twists."""
    return exhaustive_corpus(max_v=2, max_e=4)


@pytest.fixture(scope="session")
def random_corpus_500():
    return random_corpus(500, seed=20230406, max_edges=8)


@pytest.fixture(scope="session")
def plane_corpus_100():
    return random_plane_corpus(100, seed=97, max_edges=8)
