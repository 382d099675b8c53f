import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.geometry import BipartiteGraph  # noqa: E402


def path_graph(vertices):
    """Bipartite path alternating u0, v0, u1, v1, ... with the given vertex count"""
    edges = set()
    for step in range(vertices - 1):
        if step % 2 == 0:
            edges.add((step // 2, step // 2))
        else:
            edges.add((step // 2 + 1, step // 2))
    return BipartiteGraph((vertices + 1) // 2, vertices // 2, frozenset(edges))


def cycle_graph(length):
    """Even cycle u0 v0 u1 v1 ... back to u0"""
    half = length // 2
    edges = {(i, i) for i in range(half)} | {((i + 1) % half, i) for i in range(half)}
    return BipartiteGraph(half, half, frozenset(edges))


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c6():
    return cycle_graph(6)
