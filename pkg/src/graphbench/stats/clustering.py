"""Global clustering coefficient (transitivity).

C = 3 * triangles / connected_triples with connected_triples = sum_i C(d_i, 2).
The factor 3 counts each triangle once per choice of center, so C reaches 1
on a complete graph.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..graph import Graph


@dataclass(frozen=True)
class ClusteringStat:
    triangles: int
    connected_triples: int
    coefficient: float | None  # None when the graph has no connected triple

    @property
    def defined(self) -> bool:
        return self.coefficient is not None


def triangle_count(g: Graph) -> int:
    """Triangles by sorted-neighbor intersection.

    Iterates edges (u, v) with u < v and counts common neighbors w > v, which
    touches each triangle exactly once (at its two smallest vertices).
    """
    total = 0
    indptr, indices = g.adj_indptr, g.adj_indices
    for u, v in g.edges.tolist():
        nu = indices[indptr[u] : indptr[u + 1]]
        nv = indices[indptr[v] : indptr[v + 1]]
        if nu.size > nv.size:
            nu, nv = nv, nu
        common = np.intersect1d(nu, nv, assume_unique=True)
        if common.size:
            total += int(np.count_nonzero(common > v))
    return total


def global_clustering(g: Graph) -> ClusteringStat:
    d = g.degrees().astype(np.int64)
    triples = int((d * (d - 1) // 2).sum())
    tri = triangle_count(g)
    coeff = 3.0 * tri / triples if triples > 0 else None
    return ClusteringStat(triangles=tri, connected_triples=triples, coefficient=coeff)
