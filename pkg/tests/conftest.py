import random

import pytest

from sbgkit import build_sbg
from sbgkit.graph import Graph


@pytest.fixture(scope="session")
def sbg():
    return build_sbg()


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)
