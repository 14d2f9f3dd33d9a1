"""
Voltage estimation from the level structure of a graph.

The graph is grouped into BFS levels; the minimum crossing cost of each
consecutive level pair sums to ST, the hypotenuse of the right triangle
S=(0, V_max, 0), O=(0, 0, 0), T=(L, 0, 0). V_max is picked strictly inside
(0, ST), and ST is divided at the ideal points in the ratio of the average
crossing costs.
"""
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..exceptions import VmaxOutOfRangeError
from ..graph.models import LevelAssignment, NodeId, WeightedMultiGraph
from ..utils.numbers import Number, to_exact

logger = logging.getLogger(__name__)


# ============ Types ============

@dataclass(frozen=True)
class LevelEdge:
    """Original edge annotated with the levels of its endpoints"""

    edge_id: int
    u: NodeId
    v: NodeId
    level_u: int
    level_v: int

    @property
    def is_same_level(self) -> bool:
        return self.level_u == self.level_v

    @property
    def upper_level(self) -> int:
        """k for an edge crossing between levels k-1 and k"""
        return max(self.level_u, self.level_v)


@dataclass(frozen=True)
class LevelUnitGraph:
    groups: List[List[NodeId]]
    edges: List[LevelEdge]


@dataclass(frozen=True)
class LevelPairCosts:
    """Cost statistics of the edges crossing between levels k-1 and k"""

    k: int
    min_cost: Number
    avg_cost: Number
    edge_count: int
    edge_ids: Tuple[int, ...]


@dataclass(frozen=True)
class InterLevelCosts:
    pairs: List[LevelPairCosts]
    same_level_edge_counts: Dict[int, int]
    beyond_terminal_edge_count: int = 0

    @property
    def depth(self) -> int:
        return len(self.pairs)


class VmaxPolicyKind(str, Enum):
    EXPLICIT = "explicit"
    HALF_ST = "half"
    LARGEST_INTEGER_BELOW = "int"


@dataclass(frozen=True)
class VmaxPolicy:
    """How V_max is chosen inside the open interval (0, ST)"""

    kind: VmaxPolicyKind = VmaxPolicyKind.HALF_ST
    value: Optional[Number] = None

    @classmethod
    def explicit(cls, value: Number) -> "VmaxPolicy":
        return cls(VmaxPolicyKind.EXPLICIT, value)

    @classmethod
    def half_st(cls) -> "VmaxPolicy":
        return cls(VmaxPolicyKind.HALF_ST)

    @classmethod
    def largest_integer_below(cls) -> "VmaxPolicy":
        return cls(VmaxPolicyKind.LARGEST_INTEGER_BELOW)

    @classmethod
    def parse(cls, name: str, value: Optional[Number] = None) -> "VmaxPolicy":
        kind = VmaxPolicyKind(name.strip().lower())
        if kind is VmaxPolicyKind.EXPLICIT:
            if value is None:
                raise ValueError("explicit V_max policy needs a value")
            return cls.explicit(value)
        return cls(kind)

    def describe(self) -> str:
        if self.kind is VmaxPolicyKind.EXPLICIT:
            return f"explicit({self.value})"
        return self.kind.value


@dataclass(frozen=True)
class VoltageEstimate:
    st_length: Number
    v_max: Number
    segment_lengths: List[Number]
    average_costs: List[Number]
    policy: VmaxPolicy = field(default_factory=VmaxPolicy)

    @property
    def ideal_point_offsets(self) -> List[Number]:
        """Distance of each ideal point from S along ST (last one is T)"""
        offsets: List[Number] = []
        running: Number = 0
        for length in self.segment_lengths:
            running = running + length
            offsets.append(running)
        return offsets

    @property
    def base_length(self) -> float:
        """Leg OT of the right triangle with hypotenuse ST and height V_max"""
        return math.sqrt(float(self.st_length) ** 2 - float(self.v_max) ** 2)

    def segment_ratio(self) -> Optional[List[int]]:
        """Segment ratio in lowest integer terms (exact costs only)"""
        return integer_ratio(self.average_costs)


@dataclass(frozen=True)
class NearestCostEdge:
    """Crossing edge whose cost is closest to the ideal segment length"""

    k: int
    edge_id: int
    u: NodeId
    v: NodeId
    cost: Number
    segment: Number
    deviation: Number


@dataclass(frozen=True)
class PotentialColumn:
    """
    A node drawn as a column whose height is its potential.

    position is the straight-line alignment coordinate; orbit_x/orbit_y place
    the column on the circular orbit of radius level.
    """

    node: NodeId
    level: int
    position: int
    orbit_x: float
    orbit_y: float
    height: Optional[Number]


@dataclass(frozen=True)
class PotentialColumns:
    columns: List[PotentialColumn]
    v_max: Number

    def heights(self) -> Dict[NodeId, Number]:
        return {c.node: c.height for c in self.columns if c.height is not None}


@dataclass(frozen=True)
class GraphAnalysis:
    levels: LevelAssignment
    level_unit: LevelUnitGraph
    costs: InterLevelCosts
    estimate: VoltageEstimate
    nearest: List[NearestCostEdge]
    columns: PotentialColumns


# ============ Operations ============

def integer_ratio(values: Sequence[Number]) -> Optional[List[int]]:
    """
    Reduce a sequence of rationals to coprime integers in the same ratio.

    Returns:
        Integer ratio, or None for float input
    """
    if not values or not all(isinstance(v, (int, Fraction)) for v in values):
        return None
    fractions = [Fraction(v) for v in values]
    lcm = 1
    for f in fractions:
        lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in fractions]
    divisor = 0
    for i in ints:
        divisor = math.gcd(divisor, i)
    return [i // divisor for i in ints] if divisor else ints


def _mean(values: Sequence[Number]) -> Number:
    total: Number = 0
    for v in values:
        total = total + v
    if isinstance(total, int):
        return Fraction(total, len(values))
    return total / len(values)


def level_unit_graph(g: WeightedMultiGraph, lv: LevelAssignment) -> LevelUnitGraph:
    """
    Group nodes by level and annotate every edge with its endpoint levels.

    The edge multiset is preserved as is.
    """
    edges = []
    for e in g.edges:
        lu, lvv = lv.level[e.u], lv.level[e.v]
        assert abs(lu - lvv) <= 1, f"edge {e.id} skips a level ({lu} -> {lvv})"
        edges.append(LevelEdge(e.id, e.u, e.v, lu, lvv))

    return LevelUnitGraph(groups=lv.groups(), edges=edges)


def inter_level_costs(g: WeightedMultiGraph, lv: LevelAssignment) -> InterLevelCosts:
    """
    Minimum and average crossing cost for each level pair (k-1, k), k = 1..N.

    Same-level edges are excluded from the statistics and counted per level.
    Crossings beyond the terminal's level do not take part in ST and are only
    counted.

    Args:
        g: Graph
        lv: Levels of g

    Returns:
        InterLevelCosts
    """
    unit = level_unit_graph(g, lv)

    crossing: Dict[int, List[Tuple[int, Number]]] = {k: [] for k in range(1, lv.depth + 1)}
    same_level: Dict[int, int] = {}
    beyond = 0

    for le in unit.edges:
        if le.is_same_level:
            same_level[le.level_u] = same_level.get(le.level_u, 0) + 1
        elif le.upper_level <= lv.depth:
            crossing[le.upper_level].append((le.edge_id, g.edges[le.edge_id].cost))
        else:
            beyond += 1

    pairs = []
    for k in range(1, lv.depth + 1):
        entries = crossing[k]
        costs = [c for _, c in entries]
        pairs.append(LevelPairCosts(
            k=k,
            min_cost=min(costs),
            avg_cost=_mean(costs),
            edge_count=len(costs),
            edge_ids=tuple(eid for eid, _ in entries)
        ))
        logger.debug(f"Level {k - 1}->{k}: min={pairs[-1].min_cost}, avg={pairs[-1].avg_cost}, n={len(costs)}")

    return InterLevelCosts(
        pairs=pairs,
        same_level_edge_counts=dict(sorted(same_level.items())),
        beyond_terminal_edge_count=beyond
    )


def estimate_st(c: InterLevelCosts) -> Number:
    """ST = sum over level pairs of the minimum crossing cost"""
    total: Number = 0
    for pair in c.pairs:
        total = total + pair.min_cost
    return total


def select_vmax(st: Number, policy: VmaxPolicy) -> Number:
    """
    Choose V_max with 0 < V_max < ST.

    Args:
        st: ST bound (> 0)
        policy: Explicit value, half of ST, or the largest integer below ST

    Returns:
        V_max in the arithmetic of st

    Raises:
        VmaxOutOfRangeError: explicit value outside (0, ST)
    """
    exact = isinstance(st, (int, Fraction))

    if policy.kind is VmaxPolicyKind.EXPLICIT:
        value = to_exact(policy.value) if exact else float(policy.value)
        if not (0 < value < st):
            raise VmaxOutOfRangeError(policy.value, st)
        return value

    half = Fraction(st) / 2 if exact else st / 2

    if policy.kind is VmaxPolicyKind.LARGEST_INTEGER_BELOW:
        if st > 1:
            below = math.ceil(st) - 1
            return Fraction(below) if exact else float(below)
        return half

    return half


def segment_lengths(c: InterLevelCosts, st: Number) -> List[Number]:
    """Split ST into N lengths proportional to the average crossing costs"""
    total: Number = 0
    for pair in c.pairs:
        total = total + pair.avg_cost
    return [st * pair.avg_cost / total for pair in c.pairs]


def estimate_voltage(
    g: WeightedMultiGraph,
    lv: LevelAssignment,
    policy: VmaxPolicy
) -> Tuple[InterLevelCosts, VoltageEstimate]:
    """
    Run the voltage-estimation phase.

    Returns:
        Tuple of (inter-level costs, voltage estimate)
    """
    costs = inter_level_costs(g, lv)
    st = estimate_st(costs)
    v_max = select_vmax(st, policy)
    segments = segment_lengths(costs, st)

    logger.info(f"⚡ ST={st}, V_max={v_max} ({policy.describe()}), depth={costs.depth}")

    estimate = VoltageEstimate(
        st_length=st,
        v_max=v_max,
        segment_lengths=segments,
        average_costs=[p.avg_cost for p in costs.pairs],
        policy=policy
    )
    return costs, estimate


def nearest_cost_edges(
    g: WeightedMultiGraph,
    c: InterLevelCosts,
    segments: Sequence[Number]
) -> List[NearestCostEdge]:
    """
    For each level pair pick the crossing edge whose cost is nearest to the
    segment length; ties go to the lower edge id.

    This is a heuristic path suggestion, not a guaranteed shortest path.
    """
    picks = []
    for pair, segment in zip(c.pairs, segments):
        best_id = min(pair.edge_ids, key=lambda eid: (abs(g.edges[eid].cost - segment), eid))
        e = g.edges[best_id]
        picks.append(NearestCostEdge(
            k=pair.k,
            edge_id=e.id,
            u=e.u,
            v=e.v,
            cost=e.cost,
            segment=segment,
            deviation=abs(e.cost - segment)
        ))
    return picks


def potential_columns(
    g: WeightedMultiGraph,
    lv: LevelAssignment,
    solution=None,
    v_max: Optional[Number] = None
) -> PotentialColumns:
    """
    Export node columns for the 3-D potential view.

    Without a solution only start (V_max) and terminal (0) carry heights.

    Args:
        g: Graph
        lv: Levels of g
        solution: Optional CircuitSolution
        v_max: Supply voltage; taken from the solution when omitted

    Returns:
        PotentialColumns
    """
    if v_max is None:
        if solution is None:
            raise ValueError("v_max is required when no solution is attached")
        v_max = solution.v_max

    columns = []
    for level, group in enumerate(lv.groups()):
        for index, node in enumerate(group):
            angle = 2 * math.pi * index / len(group)
            if solution is not None:
                height = solution.potentials.get(node)
            elif node == g.start:
                height = v_max
            elif node == g.terminal:
                height = v_max * 0
            else:
                height = None
            columns.append(PotentialColumn(
                node=node,
                level=level,
                position=level,
                orbit_x=round(level * math.cos(angle), 12) + 0.0,
                orbit_y=round(level * math.sin(angle), 12) + 0.0,
                height=height
            ))

    return PotentialColumns(columns=columns, v_max=v_max)


def analyze_graph(
    g: WeightedMultiGraph,
    lv: LevelAssignment,
    policy: VmaxPolicy,
    solution=None
) -> GraphAnalysis:
    """Bundle every geometric quantity for the analyze report"""
    costs, estimate = estimate_voltage(g, lv, policy)
    return GraphAnalysis(
        levels=lv,
        level_unit=level_unit_graph(g, lv),
        costs=costs,
        estimate=estimate,
        nearest=nearest_cost_edges(g, costs, estimate.segment_lengths),
        columns=potential_columns(g, lv, solution, estimate.v_max)
    )
