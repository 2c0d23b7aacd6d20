import itertools
import random

import pytest

from rainbowlab.graph import Graph


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(0)
