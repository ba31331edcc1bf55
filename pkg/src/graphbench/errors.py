"""Exception hierarchy for graphbench.

Every library error derives from GraphBenchError so callers can catch one
type at the CLI boundary. Construction errors carry the offending values.
"""


class GraphBenchError(Exception):
    """Base class for all graphbench errors."""


class SelfLoop(GraphBenchError):
    def __init__(self, node: int):
        self.node = node
        super().__init__(f"self-loop at node {node}")


class DuplicateEdge(GraphBenchError):
    def __init__(self, u: int, v: int):
        self.edge = (u, v)
        super().__init__(f"duplicate edge ({u}, {v})")


class NodeOutOfRange(GraphBenchError):
    def __init__(self, node: int, node_count: int):
        self.node = node
        self.node_count = node_count
        super().__init__(f"node id {node} outside [0, {node_count})")


class InvalidProbability(GraphBenchError):
    pass


class InvalidParams(GraphBenchError):
    pass


class TruncationTooCoarse(GraphBenchError):
    def __init__(self, fraction: float, limit: float):
        self.fraction = fraction
        self.limit = limit
        super().__init__(
            f"jump truncation discards {fraction:.3g} of expected total mass "
            f"(limit {limit:.3g}); lower epsilon or raise the limit"
        )


class DegenerateDraw(GraphBenchError):
    """Realized random graph has fewer than 2 nodes; caller may resample."""


class EmptyGraph(GraphBenchError):
    pass


class DegeneratePattern(GraphBenchError):
    """No candidate core set induces a non-constant ideal pattern."""


class SizeCapExceeded(GraphBenchError):
    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"matrix size {n} exceeds spectral size cap {cap}")


class NonSymmetricInput(GraphBenchError):
    pass


class InvalidEdgeListFormat(GraphBenchError):
    pass


class ConfigInvalid(GraphBenchError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"config error at {path}: {message}")


class GenerationFailed(GraphBenchError):
    def __init__(self, model: str, seed: int, message: str):
        self.model = model
        self.seed = seed
        super().__init__(f"generation failed for model={model} seed={seed}: {message}")


class EmptyInput(GraphBenchError):
    pass
