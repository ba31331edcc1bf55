"""Connected components via union-find.

This is the production component counter; the spectral module provides an
independent cross-check through the Laplacian null multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..graph import Graph


@dataclass(frozen=True)
class ComponentCount:
    count: int
    component_labels: np.ndarray  # label of node i = smallest node id in its component


class UnionFind:
    """Array-based disjoint sets with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def connected_components(g: Graph) -> ComponentCount:
    """Count components and label each node with its component's smallest id."""
    n = g.node_count
    uf = UnionFind(n)
    for u, v in g.edges:
        uf.union(int(u), int(v))
    labels = np.empty(n, dtype=np.int64)
    smallest: dict[int, int] = {}
    for v in range(n):  # ascending, so first hit per root is dictionary minimum
        root = uf.find(v)
        smallest.setdefault(root, v)
        labels[v] = smallest[root]
    labels.setflags(write=False)
    return ComponentCount(count=len(smallest), component_labels=labels)
