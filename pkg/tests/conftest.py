import random

import pytest

from splitcut import Graph


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def edgeless_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def k3() -> Graph:
    return complete_graph(3)


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def two_edges() -> Graph:
    # two disjoint edges: 1-2 and 3-4 in 1-based labels
    return Graph.from_edges(4, [(0, 1), (2, 3)])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
