"""
Graph simplification pipeline: estimate the voltage, solve the circuit and
remove the edges that carry no current.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Set, Tuple

from ..config.settings import (
    DEFAULT_NUMBER_MODE,
    DEFAULT_VMAX_POLICY,
    PATH_COUNT_CAP,
    ZERO_TOLERANCE
)
from ..exceptions import InputError, NumericalError
from ..graph.levels import compute_levels
from ..graph.models import LevelAssignment, NodeId, WeightedMultiGraph
from ..utils.numbers import Number, NumberMode
from .circuit_solver import RESIDUAL_WARNING_LEVEL, CircuitSolution, solve_circuit
from .pathfinder import PathComparison, compare
from .potential_geometry import InterLevelCosts, VmaxPolicy, VoltageEstimate, estimate_voltage

logger = logging.getLogger(__name__)


def _default_policy() -> VmaxPolicy:
    return VmaxPolicy.parse(DEFAULT_VMAX_POLICY)


@dataclass(frozen=True)
class SimplifyConfig:
    """
    Pipeline parameters.

    zero_tolerance is relative to the largest edge current and only applies to
    Float64; ExactRational removes edges whose current is exactly zero.
    """

    vmax_policy: VmaxPolicy = field(default_factory=_default_policy)
    number_mode: NumberMode = NumberMode.parse(DEFAULT_NUMBER_MODE)
    zero_tolerance: float = ZERO_TOLERANCE
    path_count_cap: int = PATH_COUNT_CAP

    def __post_init__(self):
        if not (0 <= self.zero_tolerance < 1):
            raise InputError(f"zero tolerance must satisfy 0 <= t < 1 (got {self.zero_tolerance})")
        if self.path_count_cap < 1:
            raise InputError(f"path count cap must be >= 1 (got {self.path_count_cap})")

    @property
    def exact(self) -> bool:
        return self.number_mode is NumberMode.EXACT_RATIONAL


@dataclass(frozen=True)
class RemovedEdge:
    edge_id: int
    u: NodeId
    v: NodeId
    cost: Number
    current: Number


@dataclass(frozen=True)
class SimplificationReport:
    original: WeightedMultiGraph
    simplified: WeightedMultiGraph
    levels: LevelAssignment
    costs: InterLevelCosts
    estimate: VoltageEstimate
    solution: CircuitSolution
    removed_edges: List[RemovedEdge]
    edge_id_mapping: Dict[int, int]
    equipotential_pairs: List[Tuple[NodeId, NodeId]]
    comparison: PathComparison
    config: SimplifyConfig
    resolved: Optional[CircuitSolution] = None
    potential_drift: Optional[Number] = None
    warnings: List[str] = field(default_factory=list)


# ============ Edge Removal ============

def _is_zero(value: Number, threshold: Number, cfg: SimplifyConfig) -> bool:
    if cfg.exact:
        return value == 0
    return abs(value) <= threshold


def zero_current_edges(solution: CircuitSolution, cfg: SimplifyConfig) -> Set[int]:
    """
    Edges whose current is zero.

    Float64: |I| <= zero_tolerance * max |I|. ExactRational: I == 0.
    """
    threshold = cfg.zero_tolerance * float(solution.max_abs_current())
    return {eid for eid, current in solution.currents.items() if _is_zero(current, threshold, cfg)}


def equipotential_pairs(
    g: WeightedMultiGraph,
    solution: CircuitSolution,
    cfg: SimplifyConfig
) -> List[Tuple[NodeId, NodeId]]:
    """Node pairs sharing an edge whose potentials agree within tolerance * V_max"""
    threshold = cfg.zero_tolerance * float(solution.v_max)
    pairs = set()
    for e in g.edges:
        a, b = e.endpoints
        if a not in solution.potentials or b not in solution.potentials:
            continue
        if _is_zero(solution.potentials[a] - solution.potentials[b], threshold, cfg):
            pairs.add((a, b))
    return sorted(pairs)


def remove_edges(g: WeightedMultiGraph, ids: Iterable[int]) -> WeightedMultiGraph:
    """
    Drop edges by id, keeping every node.

    Raises:
        UnknownEdgeIdError: an id is not in the graph
    """
    simplified, _ = g.without_edges(ids)
    return simplified


def edge_id_mapping(g: WeightedMultiGraph, ids: Iterable[int]) -> Dict[int, int]:
    """Old id -> new id of the surviving edges after remove_edges"""
    _, mapping = g.without_edges(ids)
    return mapping


def _potential_drift(before: CircuitSolution, after: CircuitSolution) -> Number:
    shared = [n for n in after.potentials if n in before.potentials]
    drift: Number = 0 * before.v_max
    for node in shared:
        drift = max(drift, abs(after.potentials[node] - before.potentials[node]))
    return drift


# ============ Pipeline ============

def simplify(g: WeightedMultiGraph, cfg: Optional[SimplifyConfig] = None) -> SimplificationReport:
    """
    Run voltage estimation and zero-current edge removal in a single pass.

    Args:
        g: Valid graph
        cfg: Pipeline parameters (defaults from settings)

    Returns:
        SimplificationReport with every intermediate quantity

    Raises:
        UnreachableNodeError, VmaxOutOfRangeError, SingularSystemError, ...
            from the upstream steps
    """
    cfg = cfg or SimplifyConfig()
    warnings: List[str] = []

    logger.info(f"🔍 STEP 1: Computing levels ({len(g.nodes)} nodes, {len(g.edges)} edges)...")
    levels = compute_levels(g)

    logger.info("📐 STEP 2: Estimating voltage...")
    costs, estimate = estimate_voltage(g, levels, cfg.vmax_policy)

    logger.info(f"🔌 STEP 3: Solving circuit ({cfg.number_mode.value})...")
    solution = solve_circuit(g, estimate.v_max, cfg.number_mode)
    if not cfg.exact and max(solution.kcl_residual, solution.kvl_residual) > RESIDUAL_WARNING_LEVEL:
        warnings.append(
            f"Kirchhoff residuals above {RESIDUAL_WARNING_LEVEL}: "
            f"KCL={float(solution.kcl_residual):.3e}, KVL={float(solution.kvl_residual):.3e}"
        )

    logger.info("✂️  STEP 4: Removing zero-current edges...")
    zero_ids = zero_current_edges(solution, cfg)
    simplified, mapping = g.without_edges(zero_ids)
    removed = [
        RemovedEdge(e.id, e.u, e.v, e.cost, abs(solution.currents[e.id]))
        for e in g.edges if e.id in zero_ids
    ]
    logger.info(f"  ✅ Removed {len(removed)} of {len(g.edges)} edges")

    if not simplified.connects(g.start, g.terminal):
        message = "simplified graph disconnects start from terminal"
        logger.warning(f"⚠️  {message}")
        warnings.append(message)

    logger.info("🔁 STEP 5: Re-solving simplified graph...")
    resolved: Optional[CircuitSolution] = None
    drift: Optional[Number] = None
    try:
        resolved = solve_circuit(simplified, estimate.v_max, cfg.number_mode)
        drift = _potential_drift(solution, resolved)
    except NumericalError as e:
        logger.warning(f"⚠️  Re-solve of simplified graph failed: {e}")
        warnings.append(f"re-solve of simplified graph failed: {e}")

    logger.info("🧭 STEP 6: Comparing shortest paths...")
    comparison = compare(g, simplified, cfg.path_count_cap, allow_disconnected=True)
    if not comparison.cost_preserved:
        logger.warning("⚠️  Shortest-path cost changed by simplification")

    return SimplificationReport(
        original=g,
        simplified=simplified,
        levels=levels,
        costs=costs,
        estimate=estimate,
        solution=solution,
        removed_edges=removed,
        edge_id_mapping=mapping,
        equipotential_pairs=equipotential_pairs(g, solution, cfg),
        comparison=comparison,
        config=cfg,
        resolved=resolved,
        potential_drift=drift,
        warnings=warnings
    )
