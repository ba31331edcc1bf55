"""Discrete core-periphery partitioning.

The quality of a candidate core set S is the Pearson correlation, over all
unordered node pairs, between the adjacency indicator and the ideal pattern
that links every pair with at least one endpoint in S. Pairs where either
series is constant make the correlation undefined; such partitions score 0.0,
which also pins the trivial all-core/all-periphery partitions to 0.0.

The optimizer is greedy best-single-move hill climbing from seeded restarts,
with simulated-annealing escape moves between local optima. It is a pure
function of (graph, config). exhaustive_core_periphery provides the 2^n
reference answer for small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DegeneratePattern, EmptyGraph
from ..graph import Graph
from ..seeds import child_seed, make_rng

_TIE_TOL = 1e-12
_RESTART_FILL = (0.5, 0.05, 0.1, 0.2, 0.35)  # inclusion probs cycled across random restarts


@dataclass(frozen=True)
class CorePeripheryConfig:
    restarts: int = 10
    seed: int = 0
    move_budget_factor: int = 50  # per-restart cap: factor * node_count moves
    initial_temperature: float = 1.0
    cooling: float = 0.95
    frozen_temperature: float = 1e-3

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")


@dataclass(frozen=True)
class CorePeripheryResult:
    core_members: tuple[int, ...]
    objective_value: float
    core_share: float


def core_share(result: CorePeripheryResult) -> float:
    return result.core_share


class _PairCounts:
    """Sufficient statistics for the correlation objective.

    For core size s and m_pp edges entirely inside the periphery:
      pairs covered by the pattern: P1(s) = C(n,2) - C(n-s,2)
      edges covered:                m - m_pp
    Everything else is fixed by (n, m).
    """

    def __init__(self, g: Graph):
        self.n = g.node_count
        self.m = g.edge_count
        self.pairs = self.n * (self.n - 1) // 2
        s = np.arange(self.n + 1, dtype=np.float64)
        rest = self.n - s
        self.p1_by_s = (self.pairs - rest * (rest - 1) / 2.0) / self.pairs
        frac_a = self.m / self.pairs
        self.var_a = frac_a * (1.0 - frac_a)
        self.frac_a = frac_a

    def objective(self, s, m_pp):
        """Correlation for core size(s) s and periphery-periphery edge count(s) m_pp."""
        p1 = self.p1_by_s[s]
        num = (self.m - np.asarray(m_pp, dtype=np.float64)) / self.pairs - self.frac_a * p1
        den = np.sqrt(self.var_a * p1 * (1.0 - p1))
        with np.errstate(invalid="ignore", divide="ignore"):
            return np.where(den > 0.0, num / np.where(den > 0.0, den, 1.0), 0.0)


def core_periphery_objective(g: Graph, core: set[int] | frozenset[int] | tuple[int, ...]) -> float:
    """Objective of one explicit core set (reference path, O(m))."""
    if g.edge_count == 0:
        raise EmptyGraph("core-periphery needs at least one edge")
    members = set(int(v) for v in core)
    counts = _PairCounts(g)
    in_s = np.zeros(g.node_count, dtype=bool)
    if members:
        in_s[list(members)] = True
    m_pp = int(np.count_nonzero(~in_s[g.edges[:, 0]] & ~in_s[g.edges[:, 1]]))
    return float(counts.objective(len(members), m_pp))


def _better(obj_a: float, core_a: tuple[int, ...], obj_b: float, core_b: tuple[int, ...]) -> bool:
    """True if candidate a beats candidate b under the tie-break order."""
    if obj_a > obj_b + _TIE_TOL:
        return True
    if obj_a < obj_b - _TIE_TOL:
        return False
    if len(core_a) != len(core_b):
        return len(core_a) < len(core_b)
    return core_a < core_b


class _State:
    """Incrementally maintained partition state for single-node flips."""

    def __init__(self, g: Graph, in_core: np.ndarray, counts: _PairCounts):
        self.g = g
        self.counts = counts
        self.in_core = in_core
        self.deg = g.degrees().astype(np.int64)
        self.core_deg = np.zeros(g.node_count, dtype=np.int64)
        if g.edge_count:
            u, v = g.edges[:, 0], g.edges[:, 1]
            np.add.at(self.core_deg, u, in_core[v])
            np.add.at(self.core_deg, v, in_core[u])
            self.m_pp = int(np.count_nonzero(~in_core[u] & ~in_core[v]))
        else:
            self.m_pp = 0
        self.size = int(in_core.sum())

    def flip_deltas(self) -> np.ndarray:
        """Objective after flipping each node, as a length-n array."""
        periph_deg = self.deg - self.core_deg
        new_size = np.where(self.in_core, self.size - 1, self.size + 1)
        new_m_pp = np.where(self.in_core, self.m_pp + periph_deg, self.m_pp - periph_deg)
        return self.counts.objective(new_size, new_m_pp)

    def flip_one(self, v: int) -> float:
        periph_deg = int(self.deg[v] - self.core_deg[v])
        if self.in_core[v]:
            return float(self.counts.objective(self.size - 1, self.m_pp + periph_deg))
        return float(self.counts.objective(self.size + 1, self.m_pp - periph_deg))

    def apply(self, v: int) -> None:
        periph_deg = int(self.deg[v] - self.core_deg[v])
        nbrs = self.g.neighbors(v)
        if self.in_core[v]:
            self.m_pp += periph_deg
            self.size -= 1
            self.in_core[v] = False
            self.core_deg[nbrs] -= 1
        else:
            self.m_pp -= periph_deg
            self.size += 1
            self.in_core[v] = True
            self.core_deg[nbrs] += 1

    def objective(self) -> float:
        return float(self.counts.objective(self.size, self.m_pp))

    def core_tuple(self) -> tuple[int, ...]:
        return tuple(int(v) for v in np.nonzero(self.in_core)[0])


def _initial_core(g: Graph, restart: int, rng: np.random.Generator) -> np.ndarray:
    if restart == 0:
        deg = g.degrees()
        in_core = deg > deg.mean()
        if not in_core.any():
            in_core = deg == deg.max()
        return in_core.copy()
    fill = _RESTART_FILL[(restart - 1) % len(_RESTART_FILL)]
    return rng.random(g.node_count) < fill


def core_periphery(g: Graph, opt_config: CorePeripheryConfig | None = None) -> CorePeripheryResult:
    """Best core-periphery partition found by seeded multi-restart search.

    Ties between equal-objective partitions are broken toward the smaller
    core, then the lexicographically smallest member tuple. The empty core
    (objective 0.0 by the degeneracy convention) is always a candidate, so
    the returned objective is never below either trivial partition's.
    """
    cfg = opt_config or CorePeripheryConfig()
    if g.edge_count == 0:
        raise EmptyGraph("core-periphery needs at least one edge")
    if g.node_count < 3:
        raise DegeneratePattern(
            f"graphs on {g.node_count} nodes admit no non-constant core pattern"
        )
    counts = _PairCounts(g)
    best_obj, best_core = 0.0, ()
    budget = cfg.move_budget_factor * g.node_count
    for restart in range(cfg.restarts):
        rng = make_rng(child_seed(cfg.seed, restart))
        state = _State(g, _initial_core(g, restart, rng), counts)
        current = state.objective()
        temperature = cfg.initial_temperature
        moves = 0
        while moves < budget:
            candidates = state.flip_deltas()
            v = int(np.argmax(candidates))  # first index wins ties: deterministic
            if candidates[v] > current + _TIE_TOL:
                state.apply(v)
                current = float(candidates[v])
                moves += 1
                continue
            # local optimum: record, then try an annealing escape
            core = state.core_tuple()
            if _better(current, core, best_obj, best_core):
                best_obj, best_core = current, core
            if temperature < cfg.frozen_temperature:
                break
            v = int(rng.integers(g.node_count))
            delta = state.flip_one(v) - current
            accept = delta >= 0.0 or rng.random() < np.exp(delta / temperature)
            temperature *= cfg.cooling
            moves += 1
            if accept:
                state.apply(v)
                current = state.objective()
        core = state.core_tuple()
        current = state.objective()
        if _better(current, core, best_obj, best_core):
            best_obj, best_core = current, core
    n = g.node_count
    return CorePeripheryResult(
        core_members=best_core,
        objective_value=float(best_obj),
        core_share=len(best_core) / n,
    )


def exhaustive_core_periphery(g: Graph, max_nodes: int = 20) -> CorePeripheryResult:
    """Reference optimum by full enumeration of the 2^n core sets."""
    if g.edge_count == 0:
        raise EmptyGraph("core-periphery needs at least one edge")
    n = g.node_count
    if n < 3:
        raise DegeneratePattern(
            f"graphs on {g.node_count} nodes admit no non-constant core pattern"
        )
    if n > max_nodes:
        raise ValueError(f"exhaustive search capped at {max_nodes} nodes, got {n}")
    counts = _PairCounts(g)
    masks = np.arange(1 << n, dtype=np.uint32)
    sizes = np.zeros(1 << n, dtype=np.int64)
    for bit in range(n):
        sizes += (masks >> bit) & 1
    # periphery-periphery edge count per mask
    m_pp = np.zeros(1 << n, dtype=np.int64)
    for u, v in g.edges.tolist():
        outside = ((masks >> u) & 1 == 0) & ((masks >> v) & 1 == 0)
        m_pp += outside
    objs = counts.objective(sizes, m_pp)
    best_obj, best_core = 0.0, ()
    for mask in range(1 << n):
        obj = float(objs[mask])
        if obj < best_obj - _TIE_TOL:
            continue
        core = tuple(bit for bit in range(n) if (mask >> bit) & 1)
        if _better(obj, core, best_obj, best_core):
            best_obj, best_core = obj, core
    return CorePeripheryResult(
        core_members=best_core,
        objective_value=float(best_obj),
        core_share=len(best_core) / n,
    )
