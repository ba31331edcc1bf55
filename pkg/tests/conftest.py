import numpy as np
import pytest
from hypothesis import strategies as st

from graphbench import build_graph


@pytest.fixture
def star4():
    """Hub 0 with three leaves."""
    return build_graph(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def path4():
    return build_graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def cycle4():
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def triangle():
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k4_minus_edge():
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def complete_graph(n):
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def random_graph(n, p, rng):
    """Independent of the library's ER generator; used as test input only."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


@st.composite
def graphs(draw, min_nodes=1, max_nodes=16, min_edges=0):
    if min_edges > 0:
        need = 2
        while need * (need - 1) // 2 < min_edges:
            need += 1
        min_nodes = max(min_nodes, need)
    n = draw(st.integers(min_nodes, max_nodes))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return build_graph(n, [])
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min_edges))
    return build_graph(n, chosen)


def permute_graph(g, rng):
    """Relabel nodes by a random permutation."""
    perm = rng.permutation(g.node_count)
    edges = [(int(perm[u]), int(perm[v])) for u, v in g.edges]
    return build_graph(g.node_count, edges)


def adjacency_matrix(g):
    a = np.zeros((g.node_count, g.node_count), dtype=np.int64)
    if g.edge_count:
        a[g.edges[:, 0], g.edges[:, 1]] = 1
        a[g.edges[:, 1], g.edges[:, 0]] = 1
    return a
