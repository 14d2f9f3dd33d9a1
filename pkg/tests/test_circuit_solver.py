"""
Nodal analysis, currents, Kirchhoff residuals and effective resistance.
"""
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from kirchhoff.exceptions import NumericalError, SingularSystemError, ZeroCurrentError
from kirchhoff.graph import WeightedMultiGraph, compute_levels
from kirchhoff.services.circuit_solver import (
    build_nodal_system,
    edge_currents,
    effective_resistance,
    fundamental_cycles,
    kcl_residual,
    kvl_residual,
    net_current_out,
    solve_circuit,
    solve_potentials
)
from kirchhoff.services.linear_algebra import solve_exact, solve_float
from kirchhoff.services.potential_geometry import VmaxPolicy, estimate_voltage
from kirchhoff.utils.numbers import NumberMode

from conftest import (
    A_B, A_T, B_T, C_B, C_T3, C_T6, S_A, S_B, S_C,
    cramer_potentials,
    random_connected_graph,
    random_graphs
)

EXACT = NumberMode.EXACT_RATIONAL
V3 = Fraction(3)


# ============ Case study ============

def test_nodal_system_matrix(case_study):
    system = build_nodal_system(case_study, V3, EXACT)
    q = Fraction(7, 4)
    assert system.interior == ("a", "b", "c")
    assert system.dense() == [
        [q, -1, 0],
        [-1, q, Fraction(-1, 4)],
        [0, Fraction(-1, 4), q]
    ]
    assert list(system.rhs) == [Fraction(3, 2), 1, 3]
    assert system.floating == ()


def test_nodal_system_is_symmetric_in_float_mode(case_study):
    system = build_nodal_system(case_study, 3.0)
    assert isinstance(system.matrix, np.ndarray)
    np.testing.assert_allclose(system.matrix, system.matrix.T)


def test_exact_potentials(case_study):
    potentials = solve_potentials(build_nodal_system(case_study, V3, EXACT))
    assert potentials == {"S": 3, "T": 0, "a": 2, "b": 2, "c": 2}
    assert all(isinstance(v, Fraction) for v in potentials.values())


def test_exact_currents(case_study):
    solution = solve_circuit(case_study, V3, EXACT)
    assert solution.currents == {
        S_A: Fraction(1, 2),
        S_B: Fraction(1, 3),
        S_C: Fraction(1),
        A_B: 0,
        C_B: 0,
        A_T: Fraction(-1, 2),
        B_T: Fraction(-1, 3),
        C_T6: Fraction(-1, 3),
        C_T3: Fraction(-2, 3),
    }
    magnitudes = {abs(i) for i in solution.currents.values()}
    assert magnitudes == {Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), 0}


def test_exact_totals_and_residuals(case_study):
    solution = solve_circuit(case_study, V3, EXACT)
    assert solution.total_current == Fraction(11, 6)
    assert solution.terminal_current == Fraction(11, 6)
    assert solution.effective_resistance == Fraction(18, 11)
    assert solution.kcl_residual == 0
    assert solution.kvl_residual == 0
    assert solution.cycle_count == 6
    assert solution.interior_size == 3
    assert solution.max_abs_current() == 1


def test_float_matches_exact(case_study):
    solution = solve_circuit(case_study, 3.0)
    assert solution.number_mode is NumberMode.FLOAT64
    for node, value in {"S": 3, "T": 0, "a": 2, "b": 2, "c": 2}.items():
        assert solution.potentials[node] == pytest.approx(value, rel=1e-9, abs=1e-12)
    assert solution.effective_resistance == pytest.approx(18 / 11, rel=1e-9)
    assert abs(solution.current(A_B)) < 1e-12
    assert solution.kcl_residual <= 1e-10
    assert solution.kvl_residual <= 1e-10


def test_currents_follow_lexicographic_sign_convention():
    g = WeightedMultiGraph.from_edges([("b", "a", Fraction(1)), ("a", "z", Fraction(1))], "b", "z")
    solution = solve_circuit(g, Fraction(2), EXACT)
    # start b is the high side, so the current flows b -> a, i.e. negative
    assert solution.currents[0] == -1
    assert solution.currents[1] == 1


def test_potentials_scale_with_vmax(case_study):
    one = solve_circuit(case_study, Fraction(1), EXACT)
    three = solve_circuit(case_study, V3, EXACT)
    for node in case_study.nodes:
        assert three.potentials[node] == 3 * one.potentials[node]
    assert one.effective_resistance == three.effective_resistance


# ============ Helpers ============

def test_effective_resistance_needs_current():
    g = WeightedMultiGraph.from_edges([("S", "a", Fraction(1)), ("T", "b", Fraction(1))], "S", "T")
    with pytest.raises(ZeroCurrentError):
        solve_circuit(g, V3, EXACT)
    assert issubclass(ZeroCurrentError, NumericalError)


def test_effective_resistance_direct(case_study):
    potentials = {"S": V3, "T": Fraction(0), "a": Fraction(2), "b": Fraction(2), "c": Fraction(2)}
    currents = edge_currents(case_study, potentials)
    assert effective_resistance(case_study, V3, potentials, currents) == Fraction(18, 11)
    assert net_current_out(case_study, currents, "T") == Fraction(-11, 6)


def test_floating_nodes_are_left_out():
    g = WeightedMultiGraph.from_edges(
        [("S", "T", Fraction(2)), ("S", "a", Fraction(1)), ("x", "y", Fraction(1))], "S", "T"
    )
    solution = solve_circuit(g, V3, EXACT)
    assert solution.floating_nodes == ("x", "y")
    assert "x" not in solution.potentials
    assert solution.currents[2] == 0
    assert solution.potentials["a"] == 3
    assert solution.effective_resistance == 2


def test_singular_float_system():
    with pytest.raises(SingularSystemError) as excinfo:
        solve_float(np.array([[1.0, 1.0], [1.0, 1.0]]), np.array([1.0, 2.0]))
    assert excinfo.value.pivot_index == 1


def test_singular_exact_system():
    with pytest.raises(SingularSystemError):
        solve_exact([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]], [Fraction(1), Fraction(1)])


def test_exact_solver_pivots():
    x = solve_exact([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]], [Fraction(2), Fraction(5)])
    assert x == [5, 2]


def test_empty_system():
    g = WeightedMultiGraph.from_edges([("S", "T", Fraction(4))], "S", "T")
    solution = solve_circuit(g, Fraction(1), EXACT)
    assert solution.interior_size == 0
    assert solution.effective_resistance == 4
    assert solution.cycle_count == 1


# ============ Kirchhoff residuals ============

def _balance(g, loop):
    net = Counter()
    for eid, sign in loop:
        a, b = g.edges[eid].endpoints
        src, dst = (a, b) if sign > 0 else (b, a)
        net[src] -= 1
        net[dst] += 1
    return {n: c for n, c in net.items() if c}


def test_fundamental_cycles_are_closed(case_study):
    basis = fundamental_cycles(case_study)
    assert len(basis.cycles) == len(case_study.edges) - len(case_study.nodes) + 1
    for cycle in basis.cycles:
        assert _balance(case_study, cycle) == {}
    assert _balance(case_study, basis.source_path) == {"S": -1, "T": 1}
    assert basis.loop_count == 6


def test_parallel_edges_form_two_edge_cycle():
    g = WeightedMultiGraph.from_edges([("S", "T", Fraction(1)), ("S", "T", Fraction(2))], "S", "T")
    basis = fundamental_cycles(g)
    assert basis.cycles == [[(1, 1), (0, -1)]]
    assert basis.source_path == [(0, 1)]


def test_residuals_detect_broken_laws(case_study):
    solution = solve_circuit(case_study, V3, EXACT)
    tampered = dict(solution.currents)
    tampered[A_B] = Fraction(1, 10)
    assert kcl_residual(case_study, tampered) > 0
    assert kvl_residual(case_study, tampered, V3) > 0


def test_residuals_on_random_float_graphs():
    for g in random_graphs(seed=2024, count=100, max_nodes=60):
        _, estimate = estimate_voltage(g, compute_levels(g), VmaxPolicy.half_st())
        solution = solve_circuit(g, estimate.v_max)
        assert solution.kcl_residual <= 1e-10
        assert solution.kvl_residual <= 1e-10
        assert solution.terminal_current == pytest.approx(solution.total_current, rel=1e-9)


def test_residuals_vanish_in_exact_mode():
    for g in random_graphs(seed=99, count=30, max_nodes=20):
        _, estimate = estimate_voltage(g, compute_levels(g), VmaxPolicy.half_st())
        solution = solve_circuit(g, estimate.v_max, EXACT)
        assert solution.kcl_residual == 0
        assert solution.kvl_residual == 0


# ============ Oracle ============

def test_float_potentials_match_exact_oracle():
    import random

    rng = random.Random(6)
    for _ in range(500):
        n = rng.randint(2, 6)
        g = random_connected_graph(rng, n, rng.randint(0, n), costs=(1, 2, 3))
        v_max = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        expected = cramer_potentials(g, v_max)

        floats = solve_circuit(g, v_max).potentials
        exact = solve_circuit(g, v_max, EXACT).potentials
        assert exact == expected
        for node, value in expected.items():
            assert floats[node] == pytest.approx(float(value), rel=1e-9, abs=1e-9 * float(v_max))


def test_float_currents_match_exact_on_large_graphs():
    import random

    rng = random.Random(8)
    for _ in range(3):
        n = rng.randint(60, 100)
        g = random_connected_graph(rng, n, n, costs=range(1, 6))
        v_max = Fraction(rng.randint(1, 9))

        floats = solve_circuit(g, v_max).currents
        exact = solve_circuit(g, v_max, EXACT).currents
        scale = float(max(abs(i) for i in exact.values()))
        for eid, value in exact.items():
            assert abs(floats[eid] - float(value)) <= 1e-9 * scale
