from .potential_geometry import (
    VmaxPolicy,
    VoltageEstimate,
    analyze_graph,
    estimate_st,
    estimate_voltage,
    inter_level_costs,
    level_unit_graph,
    nearest_cost_edges,
    potential_columns,
    segment_lengths,
    select_vmax
)
from .circuit_solver import (
    CircuitSolution,
    build_nodal_system,
    edge_currents,
    effective_resistance,
    fundamental_cycles,
    kcl_residual,
    kvl_residual,
    solve_circuit,
    solve_potentials
)
from .pathfinder import PathComparison, PathResult, compare, count_simple_paths, shortest_path
from .simplifier import (
    SimplificationReport,
    SimplifyConfig,
    edge_id_mapping,
    remove_edges,
    simplify,
    zero_current_edges
)
from .dot_export import export_dot

__all__ = [
    # Potential geometry
    "VmaxPolicy",
    "VoltageEstimate",
    "analyze_graph",
    "estimate_st",
    "estimate_voltage",
    "inter_level_costs",
    "level_unit_graph",
    "nearest_cost_edges",
    "potential_columns",
    "segment_lengths",
    "select_vmax",
    # Circuit solver
    "CircuitSolution",
    "build_nodal_system",
    "edge_currents",
    "effective_resistance",
    "fundamental_cycles",
    "kcl_residual",
    "kvl_residual",
    "solve_circuit",
    "solve_potentials",
    # Pathfinder
    "PathComparison",
    "PathResult",
    "compare",
    "count_simple_paths",
    "shortest_path",
    # Simplifier
    "SimplificationReport",
    "SimplifyConfig",
    "edge_id_mapping",
    "remove_edges",
    "simplify",
    "zero_current_edges",
    # DOT export
    "export_dot"
]
