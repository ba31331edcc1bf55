"""Seeded random graph generators: Erdos-Renyi, Barabasi-Albert, and the
generalized-gamma-process (GGP) random graph.

All generators are pure functions of (params, seed): the same pair always
yields a byte-identical edge list. Replicates should use child seeds derived
via seeds.child_seed so their streams are independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import exp1, gammainc

from .errors import DegenerateDraw, InvalidParams, InvalidProbability, TruncationTooCoarse
from .graph import Graph, from_canonical_edges
from .seeds import child_seed, make_rng

# Jump-mass fraction below epsilon that sample_ggp_weights tolerates by default.
DEFAULT_TRUNCATION_LIMIT = 0.05

_PAIR_CHUNK = 1 << 20
_JUMP_CHUNK = 1 << 21


@dataclass(frozen=True)
class ERParams:
    """G(n, p): every unordered node pair is an edge independently with prob p."""

    n: int
    p: float

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParams(f"node count must be nonnegative, got {self.n}")
        if not (0.0 <= self.p <= 1.0) or math.isnan(self.p):
            raise InvalidProbability(f"edge probability must lie in [0, 1], got {self.p}")


@dataclass(frozen=True)
class BAParams:
    """Preferential attachment: m edges per arriving node, complete seed of m0 nodes.

    m0 defaults to m.
    """

    n: int
    m: int
    m0: int | None = None

    def __post_init__(self):
        if self.m0 is None:
            object.__setattr__(self, "m0", self.m)
        if self.m < 1:
            raise InvalidParams(f"edges per arrival must be >= 1, got {self.m}")
        if self.m0 < self.m:
            raise InvalidParams(f"seed size m0={self.m0} smaller than m={self.m}")
        if self.n < self.m0:
            raise InvalidParams(f"final size n={self.n} smaller than seed size m0={self.m0}")


@dataclass(frozen=True)
class GGPParams:
    """Generalized gamma process: Levy intensity alpha/Gamma(1-sigma) * w^(-1-sigma) * exp(-tau*w).

    alpha scales total mass, sigma in [0, 1) controls sparsity, tau tilts the
    tail, epsilon truncates jumps below it (they would almost surely realize
    no edges).
    """

    alpha: float
    sigma: float
    tau: float
    epsilon: float = 1e-6

    def __post_init__(self):
        if not self.alpha > 0:
            raise InvalidParams(f"alpha must be positive, got {self.alpha}")
        if not (0.0 <= self.sigma < 1.0):
            raise InvalidParams(f"sigma must lie in [0, 1), got {self.sigma}")
        if not self.tau > 0:
            raise InvalidParams(f"tau must be positive, got {self.tau}")
        if not self.epsilon > 0:
            raise InvalidParams(f"epsilon must be positive, got {self.epsilon}")


def generate_er(params: ERParams, seed: int) -> Graph:
    """Sample G(n, p), iterating the C(n,2) pair slots in lexicographic order."""
    n, p = params.n, params.p
    rng = make_rng(seed)
    total = n * (n - 1) // 2
    if total == 0 or p == 0.0:
        # still consume nothing: empty graph is deterministic anyway
        return from_canonical_edges(n, np.empty((0, 2), dtype=np.int64))
    # offsets[u] = flat index of pair (u, u+1)
    u_ids = np.arange(n, dtype=np.int64)
    offsets = u_ids * (n - 1) - u_ids * (u_ids - 1) // 2
    hits = []
    for start in range(0, total, _PAIR_CHUNK):
        stop = min(start + _PAIR_CHUNK, total)
        draw = rng.random(stop - start)
        flat = np.nonzero(draw < p)[0] + start
        if flat.size:
            hits.append(flat)
    if not hits:
        return from_canonical_edges(n, np.empty((0, 2), dtype=np.int64))
    flat = np.concatenate(hits)
    u = np.searchsorted(offsets, flat, side="right") - 1
    v = flat - offsets[u] + u + 1
    return from_canonical_edges(n, _canonical(np.stack([u, v], axis=1)))


def generate_ba(params: BAParams, seed: int) -> Graph:
    """Grow a Barabasi-Albert graph by repeated-stub-list sampling.

    The stub list holds both endpoints of every existing edge, so a uniform
    draw from it is a degree-proportional draw over nodes. Each arrival keeps
    drawing until it has m distinct targets, then its own stubs are appended.
    """
    n, m, m0 = params.n, params.m, params.m0
    rng = make_rng(seed)
    edges = [(i, j) for i in range(m0) for j in range(i + 1, m0)]
    stubs = []
    for i, j in edges:
        stubs.extend((i, j))
    for v in range(m0, n):
        targets: set[int] = set()
        while len(targets) < m:
            if stubs:
                t = stubs[int(rng.integers(len(stubs)))]
            else:
                # empty stub list only when m0 == 1: attach uniformly
                t = int(rng.integers(v))
            targets.add(int(t))
        for t in sorted(targets):
            edges.append((t, v))
            stubs.extend((t, v))
    return from_canonical_edges(n, _canonical(np.asarray(edges, dtype=np.int64).reshape(len(edges), 2)))


def truncated_mass_fraction(params: GGPParams) -> float:
    """Fraction of the expected total jump mass discarded below epsilon.

    Expected mass of jumps in [0, x) is proportional to the lower incomplete
    gamma function gamma(1 - sigma, tau * x), so the discarded fraction is the
    regularized ratio at x = epsilon.
    """
    return float(gammainc(1.0 - params.sigma, params.tau * params.epsilon))


def sample_ggp_weights(
    params: GGPParams,
    seed: int,
    truncation_limit: float = DEFAULT_TRUNCATION_LIMIT,
) -> np.ndarray:
    """Sample all jumps >= epsilon of the generalized gamma process.

    Thinning scheme: candidates come from the dominating intensity
    alpha/Gamma(1-sigma) * w^(-1-sigma) on [epsilon, inf) (closed-form tail
    inverse), and are kept with probability exp(-tau * w), which is exact.
    For sigma = 0 the dominating tail integral diverges, so candidates are
    drawn log-uniformly on [epsilon, w_max] with w_max chosen to leave less
    than 1e-12 expected true jumps above it.

    Raises TruncationTooCoarse when the mass below epsilon exceeds
    truncation_limit as a fraction of the expected total mass.
    """
    frac = truncated_mass_fraction(params)
    if frac > truncation_limit:
        raise TruncationTooCoarse(frac, truncation_limit)
    alpha, sigma, tau, eps = params.alpha, params.sigma, params.tau, params.epsilon
    rng = make_rng(seed)
    out = []
    if sigma > 0.0:
        rate = alpha / math.gamma(1.0 - sigma) * eps ** (-sigma) / sigma
        count = int(rng.poisson(rate))
        done = 0
        while done < count:
            c = min(_JUMP_CHUNK, count - done)
            w = eps * rng.random(c) ** (-1.0 / sigma)  # Pareto tail inverse
            keep = rng.random(c) < np.exp(-tau * w)
            out.append(w[keep])
            done += c
    else:
        w_max = 1.0
        while alpha * exp1(tau * w_max) >= 1e-12:
            w_max *= 2.0
        rate = alpha * math.log(w_max / eps)
        count = int(rng.poisson(rate))
        done = 0
        while done < count:
            c = min(_JUMP_CHUNK, count - done)
            w = eps * (w_max / eps) ** rng.random(c)  # log-uniform
            keep = rng.random(c) < np.exp(-tau * w)
            out.append(w[keep])
            done += c
    if not out:
        return np.empty(0, dtype=np.float64)
    return np.concatenate(out)


def generate_ggp(
    params: GGPParams,
    seed: int,
    truncation_limit: float = DEFAULT_TRUNCATION_LIMIT,
) -> Graph:
    """Sample an undirected GGP graph.

    A Poisson number of directed pairs with mean (sum of weights)^2 is drawn,
    each endpoint picked independently with probability proportional to its
    weight. Self-pairs are dropped, duplicates collapsed, and nodes that
    realized no edge are removed, re-indexing the rest densely in order of
    their position in the weight sequence.
    """
    weights = sample_ggp_weights(params, seed, truncation_limit)
    # separate stream so pair draws never reuse the jump sampler's values
    rng = make_rng(child_seed(seed, 1))
    total = float(weights.sum())
    if weights.size == 0 or total <= 0.0:
        raise DegenerateDraw("no jumps sampled above epsilon")
    n_pairs = int(rng.poisson(total * total))
    if n_pairs == 0:
        raise DegenerateDraw("no edges realized")
    cdf = np.cumsum(weights)
    cdf /= cdf[-1]
    idx = np.searchsorted(cdf, rng.random(2 * n_pairs), side="right").reshape(n_pairs, 2)
    lo = idx.min(axis=1)
    hi = idx.max(axis=1)
    keep = lo != hi
    if not keep.any():
        raise DegenerateDraw("only self-pairs realized")
    pairs = np.unique(np.stack([lo[keep], hi[keep]], axis=1), axis=0)
    nodes = np.unique(pairs)
    if nodes.size < 2:
        raise DegenerateDraw(f"realized graph has {nodes.size} nodes")
    remapped = np.searchsorted(nodes, pairs)
    return from_canonical_edges(int(nodes.size), remapped)


def _canonical(edges: np.ndarray) -> np.ndarray:
    lo = edges.min(axis=1)
    hi = edges.max(axis=1)
    e = np.stack([lo, hi], axis=1)
    order = np.lexsort((e[:, 1], e[:, 0]))
    return e[order]
