"""Shared fixtures: canonical small graphs and seeded corpora."""

from __future__ import annotations

import numpy as np
import pytest

from treelikeness import (
    Graph,
    all_pairs_distances,
)
from treelikeness.generators import (
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def grid_graph(rows: int, cols: int) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


# name -> (graph, delta*2, tau, sigma, kappa, delta_0*2, rho_0)
CANON = {
    "C4": (cycle_graph(4), 2, 2, 1, 2, 2, 2),
    "C5": (cycle_graph(5), 1, 2, 1, 0, 1, 2),
    "C6": (cycle_graph(6), 2, 2, 1, 2, 2, 2),
    "C7": (cycle_graph(7), 2, 3, 1, 0, 2, 3),
    "K4": (complete_graph(4), 0, 0, 0, 0, 0, 0),
    "star6": (star_graph(6), 0, 0, 0, 0, 0, 0),
    "path7": (path_graph(7), 0, 0, 0, 0, 0, 0),
    "petersen": (petersen_graph(), 1, 2, 1, 0, 1, 2),
    "grid3x3": (grid_graph(3, 3), 4, 4, 2, 4, 4, 4),
}


@pytest.fixture(params=sorted(CANON))
def canon_case(request):
    name = request.param
    g, d2, tau, sigma, kappa, dw2, rho0 = CANON[name]
    return {
        "name": name,
        "graph": g,
        "dist": all_pairs_distances(g),
        "delta2": d2,
        "tau": tau,
        "sigma": sigma,
        "kappa": kappa,
        "delta_w0_2": dw2,
        "rho_0": rho0,
    }


def dist_of(g: Graph) -> np.ndarray:
    return all_pairs_distances(g)
