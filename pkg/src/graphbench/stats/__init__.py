"""Global connectivity statistics over an immutable Graph.

All functions here are pure and safe to call concurrently on shared graphs.
"""

from .assortativity import AssortativityStat, RemainingDegreeStats, assortativity, remaining_degree_stats
from .clustering import ClusteringStat, global_clustering
from .connectivity import ComponentCount, connected_components
from .coreperiphery import (
    CorePeripheryConfig,
    CorePeripheryResult,
    core_periphery,
    core_periphery_objective,
    core_share,
    exhaustive_core_periphery,
)

__all__ = [
    "AssortativityStat",
    "ClusteringStat",
    "ComponentCount",
    "CorePeripheryConfig",
    "CorePeripheryResult",
    "RemainingDegreeStats",
    "assortativity",
    "connected_components",
    "core_periphery",
    "core_periphery_objective",
    "core_share",
    "exhaustive_core_periphery",
    "global_clustering",
    "remaining_degree_stats",
]
