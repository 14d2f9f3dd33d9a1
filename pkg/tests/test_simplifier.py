"""
Zero-current edge removal pipeline.
"""
import random
from fractions import Fraction

import pytest

from kirchhoff.exceptions import InputError, UnknownEdgeIdError
from kirchhoff.graph import WeightedMultiGraph, compute_levels
from kirchhoff.services.circuit_solver import solve_circuit
from kirchhoff.services.potential_geometry import VmaxPolicy, estimate_voltage
from kirchhoff.services.simplifier import (
    SimplifyConfig,
    edge_id_mapping,
    equipotential_pairs,
    remove_edges,
    simplify,
    zero_current_edges
)
from kirchhoff.utils.numbers import NumberMode

from conftest import A_B, C_B, random_connected_graph, random_graphs

EXACT = NumberMode.EXACT_RATIONAL
FLOAT = NumberMode.FLOAT64


def exact_config(v_max=None) -> SimplifyConfig:
    policy = VmaxPolicy.explicit(v_max) if v_max is not None else VmaxPolicy.half_st()
    return SimplifyConfig(vmax_policy=policy, number_mode=EXACT)


# ============ Case study ============

def test_case_study_exact(case_study):
    report = simplify(case_study, exact_config(3))

    assert [r.edge_id for r in report.removed_edges] == [A_B, C_B]
    assert [(r.u, r.v) for r in report.removed_edges] == [("a", "b"), ("c", "b")]
    assert all(r.current == 0 for r in report.removed_edges)
    assert len(report.simplified.nodes) == 5
    assert len(report.simplified.edges) == 7
    assert report.equipotential_pairs == [("a", "b"), ("b", "c")]
    assert report.estimate.st_length == 4
    assert report.solution.effective_resistance == Fraction(18, 11)
    assert report.resolved.effective_resistance == Fraction(18, 11)
    assert report.potential_drift == 0
    assert report.warnings == []


def test_case_study_comparison(case_study):
    comparison = simplify(case_study, exact_config(3)).comparison
    assert comparison.before.nodes == ("S", "c", "T")
    assert comparison.after.nodes == ("S", "c", "T")
    assert comparison.before.cost == 4
    assert comparison.cost_preserved
    assert comparison.edges_removed_count == 2
    assert comparison.search_space_reduction == Fraction(2, 9)
    assert (comparison.paths_before, comparison.paths_after) == (12, 4)


def test_case_study_float_matches_exact(case_study):
    cfg = SimplifyConfig(vmax_policy=VmaxPolicy.explicit(3), number_mode=FLOAT)
    report = simplify(case_study, cfg)
    assert [r.edge_id for r in report.removed_edges] == [A_B, C_B]
    assert report.resolved.effective_resistance == pytest.approx(18 / 11, rel=1e-9)
    assert report.potential_drift <= 1e-12


@pytest.mark.parametrize("policy", [VmaxPolicy.half_st(), VmaxPolicy.largest_integer_below(), VmaxPolicy.explicit(1)])
def test_removed_edges_do_not_depend_on_policy(case_study, policy):
    report = simplify(case_study, SimplifyConfig(vmax_policy=policy, number_mode=EXACT))
    assert {r.edge_id for r in report.removed_edges} == {A_B, C_B}


# ============ Building blocks ============

def test_zero_current_edges_exact_uses_exact_zero(case_study):
    solution = solve_circuit(case_study, Fraction(3), EXACT)
    assert zero_current_edges(solution, SimplifyConfig(number_mode=EXACT, zero_tolerance=0.5)) == {A_B, C_B}


def test_zero_current_edges_float_tolerance_is_relative(case_study):
    solution = solve_circuit(case_study, 3.0)
    assert zero_current_edges(solution, SimplifyConfig(number_mode=FLOAT)) == {A_B, C_B}
    # largest current is 1; 1/3 <= 0.4 * 1
    loose = SimplifyConfig(number_mode=FLOAT, zero_tolerance=0.4)
    assert zero_current_edges(solution, loose) == {A_B, C_B, 1, 6, 7}


def test_equipotential_pairs(case_study):
    solution = solve_circuit(case_study, Fraction(3), EXACT)
    assert equipotential_pairs(case_study, solution, exact_config()) == [("a", "b"), ("b", "c")]


def test_remove_edges_and_mapping(case_study):
    simplified = remove_edges(case_study, [A_B, C_B])
    assert len(simplified.edges) == 7
    assert simplified.nodes == case_study.nodes
    assert edge_id_mapping(case_study, [A_B, C_B])[8] == 6
    with pytest.raises(UnknownEdgeIdError):
        remove_edges(case_study, [9])


def test_remove_nothing_is_identity(case_study):
    assert remove_edges(case_study, []) == case_study


@pytest.mark.parametrize("tolerance", [1.0, -0.1, 2.0])
def test_tolerance_range(tolerance):
    with pytest.raises(InputError):
        SimplifyConfig(zero_tolerance=tolerance)


def test_path_cap_must_be_positive():
    with pytest.raises(InputError):
        SimplifyConfig(path_count_cap=0)


# ============ Structural properties ============

@pytest.mark.parametrize("mode", [EXACT, FLOAT])
def test_balanced_bridge_removes_only_the_bridge(wheatstone, mode):
    report = simplify(wheatstone, SimplifyConfig(number_mode=mode))
    assert [(r.u, r.v) for r in report.removed_edges] == [("p", "q")]


@pytest.mark.parametrize("mode", [EXACT, FLOAT])
def test_series_chain_removes_nothing(mode):
    g = WeightedMultiGraph.from_edges(
        [("S", "a", Fraction(1)), ("a", "b", Fraction(2)), ("b", "T", Fraction(3))], "S", "T"
    )
    report = simplify(g, SimplifyConfig(number_mode=mode))
    assert report.removed_edges == []
    assert report.simplified == g


@pytest.mark.parametrize("mode", [EXACT, FLOAT])
def test_dead_end_subtree_is_removed(mode):
    g = WeightedMultiGraph.from_edges(
        [
            ("S", "a", Fraction(1)),
            ("a", "T", Fraction(1)),
            ("a", "d", Fraction(2)),
            ("d", "e", Fraction(3)),
            ("d", "f", Fraction(5)),
        ],
        "S", "T"
    )
    report = simplify(g, SimplifyConfig(number_mode=mode))
    assert [r.edge_id for r in report.removed_edges] == [2, 3, 4]
    assert report.resolved.floating_nodes == ("d", "e", "f")
    assert report.warnings == []


def test_dead_end_subtrees_on_random_graphs():
    rng = random.Random(5)
    for _ in range(30):
        base = random_connected_graph(rng, rng.randint(2, 10), rng.randint(0, 8))
        anchor = rng.choice(base.nodes)
        extra = [(anchor, "z0", Fraction(rng.randint(1, 20)))]
        for i in range(1, rng.randint(1, 5)):
            extra.append((f"z{rng.randrange(i)}", f"z{i}", Fraction(rng.randint(1, 20))))
        edges = [(e.u, e.v, e.cost) for e in base.edges] + extra
        g = WeightedMultiGraph.from_edges(edges, base.start, base.terminal)

        report = simplify(g, SimplifyConfig(number_mode=EXACT, path_count_cap=10_000))
        removed = {r.edge_id for r in report.removed_edges}
        assert set(range(len(base.edges), len(g.edges))) <= removed


def test_start_and_terminal_stay_connected_in_exact_mode():
    for g in random_graphs(seed=31, count=60, max_nodes=12):
        report = simplify(g, SimplifyConfig(number_mode=EXACT, path_count_cap=10_000))
        assert report.simplified.connects(g.start, g.terminal)
        assert report.resolved.effective_resistance == report.solution.effective_resistance
        assert report.potential_drift == 0
        assert report.comparison.after.cost >= report.comparison.before.cost
        assert report.comparison.paths_after <= report.comparison.paths_before


def test_zero_current_set_is_invariant_to_vmax():
    cfg = SimplifyConfig(number_mode=FLOAT)
    for g in random_graphs(seed=2025, count=100, max_nodes=60):
        _, estimate = estimate_voltage(g, compute_levels(g), VmaxPolicy.half_st())
        st = estimate.st_length
        sets = [
            zero_current_edges(solve_circuit(g, st * k / 4), cfg)
            for k in (1, 2, 3)
        ]
        assert sets[0] == sets[1] == sets[2]


def test_float_resolve_preserves_resistance_and_potentials():
    cfg = SimplifyConfig(number_mode=FLOAT, path_count_cap=1_000)
    for g in random_graphs(seed=47, count=60, max_nodes=60):
        report = simplify(g, cfg)
        assert report.resolved is not None
        assert report.resolved.effective_resistance == pytest.approx(
            report.solution.effective_resistance, rel=1e-9
        )
        assert report.potential_drift <= 1e-9 * float(report.estimate.v_max)
