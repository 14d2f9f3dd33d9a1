from .models import Edge, LevelAssignment, NodeId, ValidationOutcome, WeightedMultiGraph
from .validation import validate
from .levels import compute_levels
from .parser import load_graph, parse_graph, serialize_graph

__all__ = [
    # Models
    "Edge",
    "LevelAssignment",
    "NodeId",
    "ValidationOutcome",
    "WeightedMultiGraph",
    # Operations
    "validate",
    "compute_levels",
    "parse_graph",
    "serialize_graph",
    "load_graph"
]
