"""
Weighted multigraph data model.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

import networkx as nx

from ..exceptions import UnknownEdgeIdError
from ..utils.numbers import Number

NodeId = str


@dataclass(frozen=True)
class Edge:
    """Undirected weighted edge; cost is both resistance (ohms) and path cost"""

    id: int
    u: NodeId
    v: NodeId
    cost: Number

    @property
    def endpoints(self) -> Tuple[NodeId, NodeId]:
        """Endpoints in lexicographic order (current sign convention)"""
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)

    def other(self, node: NodeId) -> NodeId:
        """Endpoint opposite to node"""
        return self.v if node == self.u else self.u

    def joins(self, a: NodeId, b: NodeId) -> bool:
        return {self.u, self.v} == {a, b}


@dataclass(frozen=True)
class WeightedMultiGraph:
    """
    Undirected multigraph with designated start and terminal nodes.

    Nodes are kept in sorted order so every traversal is deterministic.
    Parallel edges are allowed; invariants are checked by validate(), not here,
    so invalid graphs can still be built and reported on.
    """

    nodes: Tuple[NodeId, ...]
    edges: Tuple[Edge, ...]
    start: NodeId
    terminal: NodeId

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(sorted(self.nodes)))
        object.__setattr__(self, "edges", tuple(self.edges))

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Tuple[NodeId, NodeId, Number]],
        start: NodeId,
        terminal: NodeId,
        nodes: Iterable[NodeId] = ()
    ) -> "WeightedMultiGraph":
        """
        Build a graph from (u, v, cost) triples; ids follow iteration order.

        Nodes are the union of the explicit node list, the edge endpoints and
        start/terminal.
        """
        edge_list = [Edge(i, u, v, cost) for i, (u, v, cost) in enumerate(edges)]
        node_set: Set[NodeId] = set(nodes) | {start, terminal}
        for e in edge_list:
            node_set.update((e.u, e.v))
        return cls(tuple(node_set), tuple(edge_list), start, terminal)

    # ============ Queries ============

    @cached_property
    def node_set(self) -> FrozenSet[NodeId]:
        return frozenset(self.nodes)

    @cached_property
    def interior(self) -> Tuple[NodeId, ...]:
        """All nodes except start and terminal, sorted"""
        return tuple(n for n in self.nodes if n not in (self.start, self.terminal))

    @cached_property
    def adjacency(self) -> Dict[NodeId, List[Tuple[NodeId, int]]]:
        """Node -> [(neighbour, edge id)] sorted by neighbour then edge id"""
        adj: Dict[NodeId, List[Tuple[NodeId, int]]] = {n: [] for n in self.nodes}
        for e in self.edges:
            adj.setdefault(e.u, []).append((e.v, e.id))
            adj.setdefault(e.v, []).append((e.u, e.id))
        for entries in adj.values():
            entries.sort()
        return adj

    def edge(self, edge_id: int) -> Edge:
        return self.edges[edge_id]

    def incident_edges(self, node: NodeId) -> List[Edge]:
        return [self.edges[eid] for _, eid in self.adjacency.get(node, [])]

    def to_networkx(self) -> nx.MultiGraph:
        """MultiGraph with edge keys equal to edge ids and a 'cost' attribute"""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.nodes)
        for e in self.edges:
            graph.add_edge(e.u, e.v, key=e.id, cost=e.cost)
        return graph

    def component_of(self, node: NodeId) -> Set[NodeId]:
        """Nodes in the connected component containing node"""
        return set(nx.node_connected_component(self.to_networkx(), node))

    def connects(self, a: NodeId, b: NodeId) -> bool:
        graph = self.to_networkx()
        if a not in graph or b not in graph:
            return False
        return nx.has_path(graph, a, b)

    # ============ Transformations ============

    def without_edges(self, ids: Iterable[int]) -> Tuple["WeightedMultiGraph", Dict[int, int]]:
        """
        Remove edges by id; node set is unchanged.

        Returns:
            Tuple of (new graph with re-densified ids, old id -> new id mapping)

        Raises:
            UnknownEdgeIdError: an id does not exist
        """
        drop = set(ids)
        unknown = {i for i in drop if not (isinstance(i, int) and 0 <= i < len(self.edges))}
        if unknown:
            raise UnknownEdgeIdError(unknown)

        kept: List[Edge] = []
        mapping: Dict[int, int] = {}
        for e in self.edges:
            if e.id in drop:
                continue
            mapping[e.id] = len(kept)
            kept.append(Edge(len(kept), e.u, e.v, e.cost))

        return WeightedMultiGraph(self.nodes, tuple(kept), self.start, self.terminal), mapping

    def summary(self) -> Dict[str, int]:
        return {"nodes": len(self.nodes), "edges": len(self.edges)}


@dataclass(frozen=True)
class LevelAssignment:
    """BFS hop-level of every node measured from start"""

    level: Dict[NodeId, int]
    depth: int

    def groups(self) -> List[List[NodeId]]:
        """Nodes per level 0..max level, each group sorted"""
        top = max(self.level.values(), default=0)
        groups: List[List[NodeId]] = [[] for _ in range(top + 1)]
        for node in sorted(self.level):
            groups[self.level[node]].append(node)
        return groups

    def __getitem__(self, node: NodeId) -> int:
        return self.level[node]


@dataclass(frozen=True)
class ValidationOutcome:
    """Violations found by validate(); empty means valid"""

    violations: List[str] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.is_valid
