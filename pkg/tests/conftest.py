import random
from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings

from oddpack import Graph

settings.register_profile(
    "suite", deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile("suite")


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices, as Graph objects."""
    slots = list(combinations(range(n), 2))
    for rank in range(1 << len(slots)):
        yield Graph.from_edges(
            n, [slots[i] for i in range(len(slots)) if rank >> i & 1])


@pytest.fixture
def rng():
    return random.Random("oddpack-tests")
