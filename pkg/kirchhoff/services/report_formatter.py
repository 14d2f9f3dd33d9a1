"""
Report formatting service.

Every document carries the tool identity and the SHA-256 of the input text and
nothing time-dependent, so identical invocations give identical bytes.
"""
import json
from typing import Any, Dict, List, Optional

from ..config.settings import TOOL_NAME, TOOL_VERSION
from ..graph.models import WeightedMultiGraph
from ..utils.formatters import format_edge, format_table, format_value, json_number, json_optional
from ..utils.numbers import NumberMode
from .circuit_solver import CircuitSolution
from .pathfinder import PathComparison, PathResult
from .potential_geometry import GraphAnalysis
from .simplifier import SimplificationReport


def to_json(document: Dict[str, Any]) -> str:
    """Serialize a report document (keys in insertion order, trailing newline)"""
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def _header(digest: str) -> Dict[str, Any]:
    return {
        "tool": {"name": TOOL_NAME, "version": TOOL_VERSION},
        "input_sha256": digest
    }


def _graph_section(g: WeightedMultiGraph) -> Dict[str, Any]:
    return {
        "nodes": list(g.nodes),
        "node_count": len(g.nodes),
        "edge_count": len(g.edges),
        "start": g.start,
        "terminal": g.terminal
    }


def _currents_section(g: WeightedMultiGraph, solution: CircuitSolution) -> Dict[str, Any]:
    mode = solution.number_mode
    section = {}
    for e in g.edges:
        a, b = e.endpoints
        section[str(e.id)] = {
            "u": a,
            "v": b,
            "cost": json_number(e.cost, mode),
            "current": json_number(solution.currents[e.id], mode)
        }
    return section


def _path_section(path: Optional[PathResult], mode: NumberMode) -> Optional[Dict[str, Any]]:
    if path is None:
        return None
    return {
        "nodes": list(path.nodes),
        "edge_ids": list(path.edge_ids),
        "cost": json_number(path.cost, mode)
    }


# ============ Documents ============

def analyze_document(
    g: WeightedMultiGraph,
    analysis: GraphAnalysis,
    digest: str,
    mode: NumberMode = NumberMode.FLOAT64
) -> Dict[str, Any]:
    """
    Build the `analyze` report.

    Args:
        g: Analyzed graph
        analysis: Levels, costs, voltage estimate and geometry
        digest: SHA-256 of the input text
        mode: Number mode for serialized values

    Returns:
        JSON-serializable document
    """
    estimate = analysis.estimate
    v_max = estimate.v_max

    return {
        **_header(digest),
        "graph": _graph_section(g),
        "levels": dict(sorted(analysis.levels.level.items())),
        "level_groups": analysis.level_unit.groups,
        "inter_level_costs": [
            {
                "k": pair.k,
                "min": json_number(pair.min_cost, mode),
                "avg": json_number(pair.avg_cost, mode),
                "count": pair.edge_count,
                "edge_ids": list(pair.edge_ids)
            }
            for pair in analysis.costs.pairs
        ],
        "same_level_edge_counts": {str(k): n for k, n in analysis.costs.same_level_edge_counts.items()},
        "beyond_terminal_edge_count": analysis.costs.beyond_terminal_edge_count,
        "st_length": json_number(estimate.st_length, mode),
        "v_max": json_number(v_max, mode),
        "v_max_policy": estimate.policy.describe(),
        "segments": [json_number(s, mode) for s in estimate.segment_lengths],
        "segment_ratio": estimate.segment_ratio(),
        "ideal_point_offsets": [json_number(o, mode) for o in estimate.ideal_point_offsets],
        "triangle": {
            "S": [0.0, float(v_max), 0.0],
            "O": [0.0, 0.0, 0.0],
            "T": [estimate.base_length, 0.0, 0.0]
        },
        "nearest_cost_edges": [
            {
                "k": n.k,
                "edge_id": n.edge_id,
                "edge": format_edge(n.u, n.v),
                "cost": json_number(n.cost, mode),
                "segment": json_number(n.segment, mode),
                "deviation": json_number(n.deviation, mode)
            }
            for n in analysis.nearest
        ],
        "potential_columns": [
            {
                "node": c.node,
                "level": c.level,
                "position": c.position,
                "orbit": [c.orbit_x, c.orbit_y],
                "height": json_optional(c.height, mode)
            }
            for c in analysis.columns.columns
        ]
    }


def solve_document(g: WeightedMultiGraph, solution: CircuitSolution, digest: str) -> Dict[str, Any]:
    """Build the `solve` report"""
    mode = solution.number_mode
    return {
        **_header(digest),
        "graph": _graph_section(g),
        "number_mode": mode.value,
        "v_max": json_number(solution.v_max, mode),
        "potentials": {n: json_number(v, mode) for n, v in solution.potentials.items()},
        "currents": _currents_section(g, solution),
        "total_current": json_number(solution.total_current, mode),
        "terminal_current": json_number(solution.terminal_current, mode),
        "effective_resistance": json_number(solution.effective_resistance, mode),
        "kcl_residual": json_number(solution.kcl_residual, mode),
        "kvl_residual": json_number(solution.kvl_residual, mode),
        "cycle_count": solution.cycle_count,
        "floating_nodes": list(solution.floating_nodes)
    }


def comparison_section(comparison: PathComparison, mode: NumberMode) -> Dict[str, Any]:
    """Shortest-path comparison as a JSON object"""
    return {
        "before": _path_section(comparison.before, mode),
        "after": _path_section(comparison.after, mode),
        "cost_preserved": comparison.cost_preserved,
        "edges_removed_count": comparison.edges_removed_count,
        "search_space_reduction": json_number(comparison.search_space_reduction, mode),
        "paths_before": comparison.paths_before,
        "paths_after": comparison.paths_after,
        "path_count_cap": comparison.path_count_cap
    }


def simplify_document(report: SimplificationReport, digest: str) -> Dict[str, Any]:
    """
    Build the `simplify` report.

    Args:
        report: Pipeline result
        digest: SHA-256 of the input text

    Returns:
        JSON-serializable document
    """
    mode = report.config.number_mode
    solution = report.solution
    resolved = report.resolved

    return {
        **_header(digest),
        "number_mode": mode.value,
        "v_max_policy": report.estimate.policy.describe(),
        "zero_tolerance": report.config.zero_tolerance,
        "st_length": json_number(report.estimate.st_length, mode),
        "v_max": json_number(report.estimate.v_max, mode),
        "segments": [json_number(s, mode) for s in report.estimate.segment_lengths],
        "original": _graph_section(report.original),
        "simplified": _graph_section(report.simplified),
        "removed_edges": [
            {
                "id": r.edge_id,
                "u": r.u,
                "v": r.v,
                "cost": json_number(r.cost, mode),
                "current": json_number(r.current, mode)
            }
            for r in report.removed_edges
        ],
        "edge_id_mapping": {str(old): new for old, new in report.edge_id_mapping.items()},
        "equipotential_pairs": [list(pair) for pair in report.equipotential_pairs],
        "potentials": {n: json_number(v, mode) for n, v in solution.potentials.items()},
        "currents": _currents_section(report.original, solution),
        "total_current": json_number(solution.total_current, mode),
        "kcl_residual": json_number(solution.kcl_residual, mode),
        "kvl_residual": json_number(solution.kvl_residual, mode),
        "effective_resistance": {
            "before": json_number(solution.effective_resistance, mode),
            "after": json_optional(resolved.effective_resistance if resolved else None, mode)
        },
        "potential_drift": json_optional(report.potential_drift, mode),
        "comparison": comparison_section(report.comparison, mode),
        "warnings": list(report.warnings)
    }


def compare_document(
    comparison: PathComparison,
    digest: str,
    mode: NumberMode = NumberMode.FLOAT64,
    other_digest: Optional[str] = None
) -> Dict[str, Any]:
    """Build the `compare` report; other_digest is set when two files were compared"""
    document = _header(digest)
    if other_digest is not None:
        document["other_input_sha256"] = other_digest
    document.update(comparison_section(comparison, mode))
    return document


# ============ Human-readable ============

def _path_text(path: Optional[PathResult]) -> str:
    if path is None:
        return "(none)"
    return "-".join(path.nodes)


def _count_text(count: int, cap: int) -> str:
    return f">={cap}" if count >= cap else str(count)


def format_comparison_table(comparison: PathComparison) -> str:
    """
    Format a comparison as a plain text table.

    Args:
        comparison: Before/after shortest-path comparison

    Returns:
        Table followed by a one-line verdict
    """
    after_cost = format_value(comparison.after.cost) if comparison.after else "-"
    rows: List[List[str]] = [
        ["shortest path", _path_text(comparison.before), _path_text(comparison.after)],
        ["path cost", format_value(comparison.before.cost), after_cost],
        [
            "simple paths",
            _count_text(comparison.paths_before, comparison.path_count_cap),
            _count_text(comparison.paths_after, comparison.path_count_cap)
        ]
    ]
    verdict = "preserved" if comparison.cost_preserved else "NOT preserved"

    return (
        format_table(["metric", "before", "after"], rows) + "\n\n"
        f"edges removed: {comparison.edges_removed_count} "
        f"(search space reduction {format_value(comparison.search_space_reduction)})\n"
        f"shortest-path cost {verdict}\n"
    )
