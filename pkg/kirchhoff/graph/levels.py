"""
BFS level decomposition measured from the start node.
"""
import logging

import networkx as nx

from ..exceptions import UnreachableNodeError
from .models import LevelAssignment, WeightedMultiGraph

logger = logging.getLogger(__name__)


def compute_levels(g: WeightedMultiGraph) -> LevelAssignment:
    """
    Assign each node its unweighted hop distance from start.

    Args:
        g: Valid graph

    Returns:
        LevelAssignment with depth = level(terminal)

    Raises:
        UnreachableNodeError: some node has no path from start
    """
    distances = nx.single_source_shortest_path_length(g.to_networkx(), g.start)

    for node in g.nodes:
        if node not in distances:
            raise UnreachableNodeError(node)

    level = {node: distances[node] for node in g.nodes}
    logger.debug(f"Levels computed: depth={level[g.terminal]}, max={max(level.values())}")
    return LevelAssignment(level=level, depth=level[g.terminal])
