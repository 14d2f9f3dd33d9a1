"""
Shortest paths and simple-path counting, used to measure what simplification
does to the path-finding problem.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from heapq import heappop, heappush
from typing import Dict, List, Optional, Tuple

from ..config.settings import PATH_COUNT_CAP
from ..exceptions import InputError, NoPathError
from ..graph.models import NodeId, WeightedMultiGraph
from ..utils.numbers import Number

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathResult:
    nodes: Tuple[NodeId, ...]
    edge_ids: Tuple[int, ...]
    cost: Number


@dataclass(frozen=True)
class PathComparison:
    """
    Shortest path before and after simplification.

    after is None when simplification disconnected start from terminal.
    """

    before: PathResult
    after: Optional[PathResult]
    cost_preserved: bool
    edges_removed_count: int
    search_space_reduction: Number
    paths_before: int
    paths_after: int
    path_count_cap: int


def shortest_path(g: WeightedMultiGraph, source: NodeId, target: NodeId) -> PathResult:
    """
    Dijkstra over positive costs with a binary heap.

    Heap entries are ordered by (cost, node sequence, edge ids), so among
    equal-cost paths the lexicographically smallest node sequence wins and
    parallel edges are resolved towards the lower id.

    Raises:
        NoPathError: target is not reachable from source
    """
    heap: List[Tuple[Number, Tuple[NodeId, ...], Tuple[int, ...]]] = [(0, (source,), ())]
    best: Dict[NodeId, Number] = {source: 0}
    settled = set()

    while heap:
        cost, nodes, edge_ids = heappop(heap)
        node = nodes[-1]
        if node in settled:
            continue
        settled.add(node)

        if node == target:
            return PathResult(nodes=nodes, edge_ids=edge_ids, cost=cost)

        for neighbour, eid in g.adjacency.get(node, []):
            if neighbour in settled:
                continue
            next_cost = cost + g.edges[eid].cost
            known = best.get(neighbour)
            if known is None or next_cost <= known:
                best[neighbour] = next_cost
                heappush(heap, (next_cost, nodes + (neighbour,), edge_ids + (eid,)))

    raise NoPathError(source, target)


def count_simple_paths(
    g: WeightedMultiGraph,
    source: NodeId,
    target: NodeId,
    cap: int = PATH_COUNT_CAP
) -> int:
    """
    Count simple source->target paths by depth-first enumeration.

    Parallel edges yield distinct paths. Enumeration stops at cap.

    Returns:
        Number of paths, or cap if there are at least that many
    """
    if source == target:
        return 1

    count = 0
    on_path = {source}
    stack = [iter(g.adjacency.get(source, []))]
    trail = [source]

    while stack:
        step = next(stack[-1], None)
        if step is None:
            stack.pop()
            on_path.discard(trail.pop())
            continue

        neighbour, _ = step
        if neighbour in on_path:
            continue
        if neighbour == target:
            count += 1
            if count >= cap:
                logger.info(f"Path enumeration capped at {cap}")
                return cap
            continue

        on_path.add(neighbour)
        trail.append(neighbour)
        stack.append(iter(g.adjacency.get(neighbour, [])))

    return count


def compare(
    before: WeightedMultiGraph,
    after: WeightedMultiGraph,
    cap: int = PATH_COUNT_CAP,
    allow_disconnected: bool = False
) -> PathComparison:
    """
    Compare shortest paths of a graph and its simplification.

    Args:
        before: Original graph
        after: Simplified graph with the same start/terminal
        cap: Simple-path enumeration cap
        allow_disconnected: Report a missing path in the simplified graph as
            after=None instead of raising

    Returns:
        PathComparison

    Raises:
        NoPathError: a graph has no start->terminal path
        InputError: start/terminal differ between the graphs
    """
    if (before.start, before.terminal) != (after.start, after.terminal):
        raise InputError("graphs must share start and terminal")

    path_before = shortest_path(before, before.start, before.terminal)
    try:
        path_after: Optional[PathResult] = shortest_path(after, after.start, after.terminal)
    except NoPathError:
        if not allow_disconnected:
            raise
        logger.warning("⚠️  Simplified graph has no start->terminal path")
        path_after = None

    removed = len(before.edges) - len(after.edges)
    reduction = Fraction(removed, len(before.edges)) if before.edges else Fraction(0)

    return PathComparison(
        before=path_before,
        after=path_after,
        cost_preserved=path_after is not None and path_after.cost == path_before.cost,
        edges_removed_count=removed,
        search_space_reduction=reduction,
        paths_before=count_simple_paths(before, before.start, before.terminal, cap),
        paths_after=count_simple_paths(after, after.start, after.terminal, cap),
        path_count_cap=cap
    )
