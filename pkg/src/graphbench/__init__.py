"""graphbench: random graph generators and global connectivity statistics.

Generators: Erdos-Renyi G(n, p), Barabasi-Albert preferential attachment,
and the generalized-gamma-process random graph. Statistics: connected
components (union-find, with a Laplacian-spectrum cross-check), global
clustering, degree assortativity over remaining degrees, and discrete
core-periphery share. A seeded sweep harness reproduces statistics-versus-
size comparisons as CSV plus SVG panels.
"""

from .errors import (
    ConfigInvalid,
    DegenerateDraw,
    DegeneratePattern,
    DuplicateEdge,
    EmptyGraph,
    EmptyInput,
    GenerationFailed,
    GraphBenchError,
    InvalidEdgeListFormat,
    InvalidParams,
    InvalidProbability,
    NodeOutOfRange,
    NonSymmetricInput,
    SelfLoop,
    SizeCapExceeded,
    TruncationTooCoarse,
)
from .generators import (
    BAParams,
    ERParams,
    GGPParams,
    generate_ba,
    generate_er,
    generate_ggp,
    sample_ggp_weights,
    truncated_mass_fraction,
)
from .graph import (
    Graph,
    build_graph,
    degrees,
    from_text,
    laplacian,
    read_edge_list,
    to_text,
    write_edge_list,
)
from .seeds import child_seed, make_rng
from .spectral import SpectralResult, laplacian_spectrum
from .stats import (
    AssortativityStat,
    ClusteringStat,
    ComponentCount,
    CorePeripheryConfig,
    CorePeripheryResult,
    RemainingDegreeStats,
    assortativity,
    connected_components,
    core_periphery,
    core_periphery_objective,
    core_share,
    exhaustive_core_periphery,
    global_clustering,
    remaining_degree_stats,
)

__version__ = "0.1.0"

__all__ = [
    "AssortativityStat",
    "BAParams",
    "ClusteringStat",
    "ComponentCount",
    "ConfigInvalid",
    "CorePeripheryConfig",
    "CorePeripheryResult",
    "DegenerateDraw",
    "DegeneratePattern",
    "DuplicateEdge",
    "EmptyGraph",
    "EmptyInput",
    "ERParams",
    "GenerationFailed",
    "GGPParams",
    "Graph",
    "GraphBenchError",
    "InvalidEdgeListFormat",
    "InvalidParams",
    "InvalidProbability",
    "NodeOutOfRange",
    "NonSymmetricInput",
    "SelfLoop",
    "SizeCapExceeded",
    "SpectralResult",
    "TruncationTooCoarse",
    "RemainingDegreeStats",
    "assortativity",
    "build_graph",
    "child_seed",
    "connected_components",
    "core_periphery",
    "core_periphery_objective",
    "core_share",
    "degrees",
    "exhaustive_core_periphery",
    "from_text",
    "generate_ba",
    "generate_er",
    "generate_ggp",
    "global_clustering",
    "laplacian",
    "laplacian_spectrum",
    "make_rng",
    "read_edge_list",
    "remaining_degree_stats",
    "sample_ggp_weights",
    "to_text",
    "truncated_mass_fraction",
    "write_edge_list",
]
