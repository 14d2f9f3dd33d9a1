"""
Structural validation of weighted multigraphs.
"""
import logging
import math
import numbers
from collections import Counter
from typing import List

from ..utils.text_helpers import is_valid_name
from .models import ValidationOutcome, WeightedMultiGraph

logger = logging.getLogger(__name__)


def _cost_violation(cost) -> str:
    if isinstance(cost, bool) or not isinstance(cost, numbers.Real):
        return "non-numeric cost"
    if not math.isfinite(float(cost)):
        return "non-finite cost"
    if cost <= 0:
        return "non-positive cost"
    return ""


def validate(g: WeightedMultiGraph) -> ValidationOutcome:
    """
    Check every graph invariant.

    Violations are data: nothing is raised, the list is returned.

    Args:
        g: Graph to check

    Returns:
        ValidationOutcome with the list of violations (empty = valid)
    """
    violations: List[str] = []

    duplicates = sorted(n for n, c in Counter(g.nodes).items() if c > 1)
    violations.extend(f"duplicate node '{n}'" for n in duplicates)
    violations.extend(
        f"invalid node name '{n}'" for n in g.nodes if not is_valid_name(str(n))
    )

    if g.start == g.terminal:
        violations.append(f"start equals terminal ('{g.start}')")
    if g.start not in g.node_set:
        violations.append(f"start node '{g.start}' is not in the graph")
    if g.terminal not in g.node_set:
        violations.append(f"terminal node '{g.terminal}' is not in the graph")

    for index, e in enumerate(g.edges):
        if e.id != index:
            violations.append(f"edge ids are not 0..{len(g.edges) - 1} in order (found {e.id} at {index})")
        for endpoint in (e.u, e.v):
            if endpoint not in g.node_set:
                violations.append(f"edge {e.id} has unknown endpoint '{endpoint}'")
        if e.u == e.v:
            violations.append(f"edge {e.id} is a self-loop on '{e.u}'")
        problem = _cost_violation(e.cost)
        if problem:
            violations.append(f"{problem} on edge {e.id} ({e.u}-{e.v}: {e.cost})")

    if (
        g.start != g.terminal
        and g.start in g.node_set
        and g.terminal in g.node_set
        and not g.connects(g.start, g.terminal)
    ):
        violations.append("terminal unreachable from start")

    if violations:
        logger.debug(f"Validation found {len(violations)} violation(s)")
    return ValidationOutcome(violations)
