"""
Shared fixtures: the five-node example graph, a seeded random graph generator
and an exact brute-force potential oracle.
"""
import random
from fractions import Fraction
from pathlib import Path
from typing import Dict, List

import pytest

from kirchhoff.graph import WeightedMultiGraph, parse_graph

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

CASE_STUDY_TEXT = (DATA_DIR / "case_study.graph").read_text(encoding="utf-8")
WHEATSTONE_TEXT = (DATA_DIR / "wheatstone.graph").read_text(encoding="utf-8")

# Edge ids of the case study, in file order
S_A, S_B, S_C, A_B, C_B, A_T, B_T, C_T6, C_T3 = range(9)


@pytest.fixture
def case_study_path() -> Path:
    return DATA_DIR / "case_study.graph"


@pytest.fixture
def case_study() -> WeightedMultiGraph:
    return parse_graph(CASE_STUDY_TEXT)


@pytest.fixture
def wheatstone() -> WeightedMultiGraph:
    return parse_graph(WHEATSTONE_TEXT)


# ============ Random graphs ============

def random_connected_graph(
    rng: random.Random,
    n_nodes: int,
    extra_edges: int,
    costs=range(1, 21),
    parallel: bool = True
) -> WeightedMultiGraph:
    """
    Random spanning tree plus extra edges over nodes n00..; start is n00 and
    the terminal is a random other node. Costs are exact integers.
    """
    names = [f"n{i:02d}" for i in range(n_nodes)]
    cost_choices = list(costs)
    edges = []

    for i in range(1, n_nodes):
        j = rng.randrange(i)
        edges.append((names[j], names[i], Fraction(rng.choice(cost_choices))))

    pairs = set((min(u, v), max(u, v)) for u, v, _ in edges)
    for _ in range(extra_edges):
        u, v = rng.sample(names, 2)
        key = (min(u, v), max(u, v))
        if key in pairs and not parallel:
            continue
        pairs.add(key)
        edges.append((u, v, Fraction(rng.choice(cost_choices))))

    terminal = names[rng.randrange(1, n_nodes)]
    return WeightedMultiGraph.from_edges(edges, start=names[0], terminal=terminal)


def random_graphs(seed: int, count: int, max_nodes: int, costs=range(1, 21)) -> List[WeightedMultiGraph]:
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(2, max_nodes)
        graphs.append(random_connected_graph(rng, n, rng.randint(0, 2 * n), costs))
    return graphs


# ============ Exact oracle ============

def _determinant(matrix: List[List[Fraction]]) -> Fraction:
    """Cofactor expansion along the first row"""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return matrix[0][0]
    total = Fraction(0)
    for col in range(n):
        if matrix[0][col] == 0:
            continue
        minor = [row[:col] + row[col + 1:] for row in matrix[1:]]
        sign = -1 if col % 2 else 1
        total += sign * matrix[0][col] * _determinant(minor)
    return total


def cramer_potentials(g: WeightedMultiGraph, v_max: Fraction) -> Dict[str, Fraction]:
    """
    Node potentials by Cramer's rule on an independently assembled nodal
    matrix. Only meant for small connected graphs.
    """
    interior = [n for n in sorted(g.nodes) if n not in (g.start, g.terminal)]
    index = {n: i for i, n in enumerate(interior)}
    size = len(interior)
    a = [[Fraction(0)] * size for _ in range(size)]
    b = [Fraction(0)] * size

    for e in g.edges:
        conductance = 1 / Fraction(e.cost)
        for here, there in ((e.u, e.v), (e.v, e.u)):
            if here not in index:
                continue
            a[index[here]][index[here]] += conductance
            if there in index:
                a[index[here]][index[there]] -= conductance
            elif there == g.start:
                b[index[here]] += conductance * v_max

    det = _determinant(a)
    potentials = {g.start: Fraction(v_max), g.terminal: Fraction(0)}
    for col, node in enumerate(interior):
        replaced = [row[:col] + [b[r]] + row[col + 1:] for r, row in enumerate(a)]
        potentials[node] = _determinant(replaced) / det
    return potentials
