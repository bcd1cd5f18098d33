import logging
from itertools import combinations

import networkx as nx
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import invariant_factors

import config
from models.errors import BudgetError
from models.graph import ColoredGraph, SimplicialComplex
from models.report import HomologyReport


def conditions_hold(graph: ColoredGraph) -> bool:
    """
    Every colour class has two vertices, and any 2(h − 1) vertices of other colours
    have two common neighbours in it.
    """
    classes = graph.Classes
    h = len(classes)
    network = graph.to_networkx()
    for color, members in classes.items():
        if len(members) < 2:
            return False
        if h == 1:
            continue
        others = sorted(vertex for vertex in graph.Colors if graph.Colors[vertex] != color)
        size = min(2 * (h - 1), len(others))
        for chosen in combinations(others, size):
            common = [v for v in members if all(network.has_edge(v, u) for u in chosen)]
            if len(common) < 2:
                return False
    return True


def flag_complex(graph: ColoredGraph, simplex_cap: int = config.SIMPLEX_CAP) -> SimplicialComplex:
    found = set()
    for clique in nx.find_cliques(graph.to_networkx()):
        clique = tuple(sorted(clique))
        for size in range(1, len(clique) + 1):
            found.update(combinations(clique, size))
            if len(found) > simplex_cap:
                raise BudgetError(f"Flag complex exceeds the cap of {simplex_cap} simplices")
    logging.debug(f"Flag complex has {len(found)} simplices")
    return SimplicialComplex(list(found))


def rank_and_torsion(matrix: list[list[int]]) -> tuple[int, list[int]]:
    if not matrix or not matrix[0]:
        return 0, []
    factors = [abs(int(factor)) for factor in invariant_factors(DM(matrix, ZZ)) if factor]
    return len(factors), [factor for factor in factors if factor > 1]


def reduced_homology(complex_: SimplicialComplex) -> tuple[list[int], list[list[int]]]:
    """
    Reduced integral homology in degrees 0 .. dim: Betti numbers and torsion coefficients.
    """
    top = complex_.Dimension
    ranks = {}
    torsion = {}
    for dimension in range(top + 2):
        if dimension > top:
            ranks[dimension], torsion[dimension] = 0, []
            continue
        ranks[dimension], torsion[dimension] = rank_and_torsion(complex_.boundary(dimension))
    betti = []
    coefficients = []
    for dimension in range(top + 1):
        cells = len(complex_.Simplices.get(dimension, []))
        betti.append(cells - ranks[dimension] - ranks[dimension + 1])
        coefficients.append(torsion[dimension + 1])
    return betti, coefficients


def flag_homology(graph: ColoredGraph, simplex_cap: int = config.SIMPLEX_CAP) -> HomologyReport:
    h = graph.Height
    conditions_ok = conditions_hold(graph)
    complex_ = flag_complex(graph, simplex_cap)
    betti, torsion = reduced_homology(complex_)
    degree = h - 1
    bouquet = None
    note = ""
    if betti and not any(torsion) and all(value == 0 for d, value in enumerate(betti) if d != degree):
        bouquet = (degree, betti[degree] if degree < len(betti) else 0)
        if h >= 3:
            note = "homology-consistent with bouquet"
    logging.debug(f"Flag homology: betti={betti} torsion={torsion}")
    return HomologyReport(conditions_ok, betti, torsion, bouquet, note)


def complete_multipartite(sizes: list[int]) -> ColoredGraph:
    """
    Colour i holds sizes[i − 1] vertices; every pair of differently coloured vertices is joined.
    """
    colors = {f"v{color}_{index}": color for color, size in enumerate(sizes, start=1) for index in range(size)}
    edges = [(a, b) for a, b in combinations(sorted(colors), 2) if colors[a] != colors[b]]
    return ColoredGraph(colors, edges)


def random_colored_graph(rng, height: int, largest: int, density: float = 0.8) -> ColoredGraph:
    colors = {}
    for color in range(1, height + 1):
        for index in range(rng.randint(2, largest)):
            colors[f"v{color}_{index}"] = color
    edges = [(a, b) for a, b in combinations(sorted(colors), 2)
             if colors[a] != colors[b] and rng.random() < density]
    return ColoredGraph(colors, edges)
