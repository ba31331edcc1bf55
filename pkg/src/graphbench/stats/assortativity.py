"""Degree assortativity over remaining degrees.

The remaining degree of an endpoint is its degree minus the traversed edge.
q_k is the distribution of remaining degrees over the 2m directed stubs, e_jk
the joint distribution over edge endpoint pairs (symmetrized), and the
assortativity coefficient is their normalized covariance.

Degeneracy (regular graphs, q concentrated on one value) is decided in exact
integer arithmetic, not by comparing a float variance to zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import EmptyGraph
from ..graph import Graph


@dataclass(frozen=True)
class RemainingDegreeStats:
    q: np.ndarray  # q[k] = probability a random stub's remaining degree is k
    e: np.ndarray  # e[j, k] = joint probability over edge endpoints, symmetric
    sigma_q: float

    @property
    def degenerate(self) -> bool:
        return self.q.size <= 1


@dataclass(frozen=True)
class AssortativityStat:
    value: float | None  # None when sigma_q == 0 (regular graph)

    @property
    def defined(self) -> bool:
        return self.value is not None


def _endpoint_remaining_degrees(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    if g.edge_count == 0:
        raise EmptyGraph("remaining-degree statistics need at least one edge")
    d = g.degrees()
    return d[g.edges[:, 0]] - 1, d[g.edges[:, 1]] - 1


def remaining_degree_stats(g: Graph) -> RemainingDegreeStats:
    x, y = _endpoint_remaining_degrees(g)
    m = g.edge_count
    kmax = int(max(x.max(), y.max()))
    counts = np.zeros((kmax + 1, kmax + 1), dtype=np.int64)
    np.add.at(counts, (x, y), 1)
    np.add.at(counts, (y, x), 1)
    e = counts / (2.0 * m)
    q = e.sum(axis=0)
    mean = float((np.arange(kmax + 1) * q).sum())
    meansq = float((np.arange(kmax + 1) ** 2 * q).sum())
    var = max(meansq - mean * mean, 0.0)
    return RemainingDegreeStats(q=q, e=e, sigma_q=float(np.sqrt(var)))


def _moment_sums(x: np.ndarray, y: np.ndarray) -> tuple[int, int, int]:
    """Exact integer stub-moment sums: sum k, sum k^2, sum of ordered products."""
    s1 = int(x.sum() + y.sum())
    s2 = int((x * x).sum() + (y * y).sum())
    prod = 2 * int((x * y).sum())
    return s1, s2, prod


def assortativity_distribution_form(g: Graph) -> float | None:
    """Assortativity from the (q, e) distributions."""
    x, y = _endpoint_remaining_degrees(g)
    s1, s2, _ = _moment_sums(x, y)
    if 2 * g.edge_count * s2 - s1 * s1 == 0:  # regular graph, exact test
        return None
    stats = remaining_degree_stats(g)
    k = np.arange(stats.q.size, dtype=np.float64)
    joint = float(k @ stats.e @ k)
    mean = float((k * stats.q).sum())
    return (joint - mean * mean) / (stats.sigma_q**2)


def assortativity_edge_form(g: Graph) -> float | None:
    """Assortativity from per-edge endpoint sums, no distribution built."""
    x, y = _endpoint_remaining_degrees(g)
    m = g.edge_count
    s1, s2, prod = _moment_sums(x, y)
    if 2 * m * s2 - s1 * s1 == 0:
        return None
    xf = x.astype(np.float64)
    yf = y.astype(np.float64)
    mean = float(xf.sum() + yf.sum()) / (2 * m)
    joint = float((xf * yf).sum()) / m
    meansq = float((xf * xf).sum() + (yf * yf).sum()) / (2 * m)
    return (joint - mean * mean) / (meansq - mean * mean)


def assortativity(g: Graph, cross_check_tol: float = 1e-12) -> AssortativityStat:
    """Assortativity coefficient; the two computation routes must agree.

    Returns a flagged undefined value for regular graphs instead of raising.
    """
    r_dist = assortativity_distribution_form(g)
    r_edge = assortativity_edge_form(g)
    if (r_dist is None) != (r_edge is None):
        raise AssertionError("assortativity degeneracy decisions diverged")
    if r_dist is None:
        return AssortativityStat(value=None)
    scale = max(1.0, abs(r_dist), abs(r_edge))
    if abs(r_dist - r_edge) > cross_check_tol * scale:
        raise AssertionError(
            f"assortativity routes disagree: {r_dist!r} vs {r_edge!r}"
        )
    return AssortativityStat(value=r_dist)
