"""Simple undirected graph with dense integer node ids.

The graph is immutable after construction and stores both a canonically
sorted edge list (u < v, lexicographic) and per-node sorted neighbor lists
in CSR form, so statistics can pick whichever access pattern they need.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateEdge, InvalidEdgeListFormat, NodeOutOfRange, SelfLoop


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on nodes 0..node_count-1.

    edges is an (m, 2) int64 array with edges[i, 0] < edges[i, 1], sorted
    lexicographically. Do not mutate; arrays are marked read-only.
    """

    node_count: int
    edges: np.ndarray
    # CSR adjacency: neighbors of i are adj_indices[adj_indptr[i]:adj_indptr[i+1]], sorted.
    adj_indptr: np.ndarray = field(repr=False, compare=False)
    adj_indices: np.ndarray = field(repr=False, compare=False)

    @property
    def edge_count(self) -> int:
        return int(self.edges.shape[0])

    def degrees(self) -> np.ndarray:
        return np.diff(self.adj_indptr)

    def neighbors(self, v: int) -> np.ndarray:
        return self.adj_indices[self.adj_indptr[v] : self.adj_indptr[v + 1]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.node_count == other.node_count and np.array_equal(self.edges, other.edges)

    def __hash__(self) -> int:
        return hash((self.node_count, self.edges.tobytes()))


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _csr_from_edges(node_count: int, edges: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if not edges.size:
        return np.zeros(node_count + 1, dtype=np.int64), np.empty(0, dtype=np.int64)
    src = np.concatenate([edges[:, 0], edges[:, 1]])
    dst = np.concatenate([edges[:, 1], edges[:, 0]])
    order = np.lexsort((dst, src))  # per-node neighbor lists come out sorted
    indices = dst[order]
    deg = np.bincount(src, minlength=node_count)
    indptr = np.zeros(node_count + 1, dtype=np.int64)
    np.cumsum(deg, out=indptr[1:])
    return indptr, indices


def build_graph(node_count: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Construct a Graph, validating and canonicalizing the edge list.

    Rejects self-loops, duplicate edges (in either orientation) and endpoints
    outside [0, node_count). The result is independent of input edge order.
    """
    if node_count < 0:
        raise ValueError(f"node_count must be nonnegative, got {node_count}")
    pairs = list(edge_list)
    edges = np.asarray(pairs, dtype=np.int64).reshape(len(pairs), 2)
    if edges.size:
        loops = edges[:, 0] == edges[:, 1]
        if loops.any():
            raise SelfLoop(int(edges[int(np.argmax(loops)), 0]))
        bad = (edges < 0) | (edges >= node_count)
        if bad.any():
            i, j = np.unravel_index(int(np.argmax(bad)), bad.shape)
            raise NodeOutOfRange(int(edges[i, j]), node_count)
    lo = edges.min(axis=1)
    hi = edges.max(axis=1)
    edges = np.stack([lo, hi], axis=1) if edges.size else edges
    if edges.size:
        order = np.lexsort((edges[:, 1], edges[:, 0]))
        edges = edges[order]
        dup = np.all(edges[1:] == edges[:-1], axis=1).nonzero()[0]
        if dup.size:
            u, v = edges[dup[0] + 1]
            raise DuplicateEdge(int(u), int(v))
    indptr, indices = _csr_from_edges(node_count, edges)
    return Graph(node_count, _freeze(edges), _freeze(indptr), _freeze(indices))


def from_canonical_edges(node_count: int, edges: np.ndarray) -> Graph:
    """Fast path for generators: edges already unique, canonical and sorted."""
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    indptr, indices = _csr_from_edges(node_count, edges)
    return Graph(node_count, _freeze(edges.copy()), _freeze(indptr), _freeze(indices))


def degrees(g: Graph) -> np.ndarray:
    """Degree of every node, indexed by node id."""
    return g.degrees()


def laplacian(g: Graph) -> np.ndarray:
    """Dense combinatorial Laplacian: degree on the diagonal, -1 per edge.

    Assembled in integer arithmetic (rows sum to exactly 0) and returned as
    float64 for the eigensolver.
    """
    n = g.node_count
    lap = np.zeros((n, n), dtype=np.int64)
    if g.edge_count:
        u, v = g.edges[:, 0], g.edges[:, 1]
        lap[u, v] = -1
        lap[v, u] = -1
    lap[np.arange(n), np.arange(n)] = g.degrees()
    return lap.astype(np.float64)


def to_text(g: Graph) -> str:
    """Canonical edge-list text: 'n m' header then one 'u v' line per edge."""
    lines = [f"{g.node_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Graph:
    """Parse the edge-list format, enforcing canonical form.

    Canonical form (u < v per line, lines sorted lexicographically, LF
    endings) is required so that from_text/to_text round-trip bit-exactly.
    """
    lines = text.split("\n")
    if not text.endswith("\n"):
        raise InvalidEdgeListFormat("missing trailing newline")
    lines = lines[:-1]
    if not lines:
        raise InvalidEdgeListFormat("empty input")
    head = lines[0].split(" ")
    if len(head) != 2:
        raise InvalidEdgeListFormat(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise InvalidEdgeListFormat(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise InvalidEdgeListFormat(f"header claims {m} edges, found {len(lines) - 1}")
    pairs = []
    for ln in lines[1:]:
        parts = ln.split(" ")
        if len(parts) != 2:
            raise InvalidEdgeListFormat(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise InvalidEdgeListFormat(f"non-integer edge line {ln!r}") from exc
        if u >= v:
            raise InvalidEdgeListFormat(f"edge line {ln!r} violates u < v")
        if pairs and (u, v) <= pairs[-1]:
            raise InvalidEdgeListFormat(f"edge line {ln!r} out of canonical order")
        pairs.append((u, v))
    return build_graph(n, pairs)


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(to_text(g))


def read_edge_list(path) -> Graph:
    with open(path, "r", newline="") as fh:
        return from_text(fh.read())
