"""The brute-force oracles themselves get sanity checks on graphs whose
answers are computable by hand."""

import pytest

from treelikeness import Graph, TooLargeError, count_bfs_trees
from treelikeness.generators import complete_graph, cycle_graph, path_graph, star_graph
from treelikeness.oracles import (
    delta_brute,
    enumerate_bfs_trees,
    enumerate_geodesics,
    insize_brute,
    rho_tree_brute,
    slimness_brute,
    tau_brute,
)


class TestGeodesics:
    def test_path_has_one_geodesic(self):
        g = path_graph(6)
        assert enumerate_geodesics(g, 0, 5) == [(0, 1, 2, 3, 4, 5)]

    def test_even_cycle_has_two_antipodal_geodesics(self):
        g = cycle_graph(6)
        paths = enumerate_geodesics(g, 0, 3)
        assert len(paths) == 2
        assert all(len(p) == 4 for p in paths)

    def test_grid_counts_binomials(self):
        from conftest import grid_graph

        g = grid_graph(3, 3)
        # corner to corner in a 3x3 grid: C(4,2) = 6 lattice paths
        assert len(enumerate_geodesics(g, 0, 8)) == 6

    def test_cap_enforced(self):
        from conftest import grid_graph

        g = grid_graph(4, 4)
        with pytest.raises(TooLargeError):
            enumerate_geodesics(g, 0, 15, cap=3)


class TestTreeEnumeration:
    def test_cycle_counts(self):
        g = cycle_graph(6)
        trees = list(enumerate_bfs_trees(g, 0))
        assert len(trees) == 2 == count_bfs_trees(g, 0)

    def test_complete_graph_single_tree_per_root(self):
        g = complete_graph(5)
        assert len(list(enumerate_bfs_trees(g, 2))) == 1

    def test_trees_are_valid(self):
        g = cycle_graph(5)
        for parent in enumerate_bfs_trees(g, 0):
            assert parent[0] == -1
            assert rho_tree_brute(g, 0, list(parent)) == 2


class TestParameterOracles:
    def test_known_values_on_cycles(self):
        assert delta_brute(cycle_graph(4)) == 2  # doubled
        assert delta_brute(cycle_graph(5)) == 1
        assert tau_brute(cycle_graph(4)) == 2
        assert slimness_brute(cycle_graph(4)) == 1
        assert insize_brute(cycle_graph(4)) == 2

    def test_trees_are_zero(self):
        g = star_graph(6)
        assert delta_brute(g) == 0
        assert tau_brute(g) == 0
        assert slimness_brute(g) == 0
        assert insize_brute(g) == 0

    def test_insize_equals_thinness(self):
        # the tripod-center spread and the side-thinness scan agree
        from treelikeness.verify import sample_corpus

        for g in sample_corpus(15, 8, 301):
            assert insize_brute(g) == tau_brute(g)
