"""End-to-end acceptance battery.

Nine numbered criteria: extremal grid values, glued-grid lower bound, the
two-sided approximation chain, oracle equivalence, the inequality suite, the
satisfiability reduction, noisy-distance estimates, power-graph distance
estimates, and performance smoke tests.
"""

import random
import time

import numpy as np
import pytest

from treelikeness import (
    all_pairs_distances,
    bfs,
    bfs_tree_from_parents,
    count_bfs_trees,
    distances_from_power,
    hyperbolicity_exact,
    maxsize_over_trees,
    minsize_search,
    power_graph,
    rooted_insize_dense,
    rooted_insize_sparse,
    rooted_thinness_mu,
    thinness_exact,
)
from treelikeness.cnf import preprocess_cnf, sat_to_graph
from treelikeness.generators import (
    centered_grid,
    cycle_graph,
    glued_staircase,
    gnp_connected_fast,
    path_graph,
    random_tree,
    staircase_grid,
    star_graph,
)
from treelikeness.insize import _TreeScanner
from treelikeness.oracles import sat_brute, slimness_brute, tau_brute
from treelikeness.slimness import pointed_slimness, slimness_exact
from treelikeness.verify import (
    check_graph_relations,
    check_sparse_dense,
    sample_corpus,
    sat_corpus,
)

CORPUS_SEED = 977


def family_constructions():
    return [
        staircase_grid(1),
        staircase_grid(2),
        centered_grid(1),
        centered_grid(2),
        glued_staircase(2),
    ]


@pytest.fixture(scope="module")
def relation_violations():
    """Criteria 3, 5 and 7 share one expensive pass over the same corpus:
    >= 200 seeded random connected graphs with n <= 60, plus the extremal
    families with k <= 2."""
    graphs = sample_corpus(260, 60, CORPUS_SEED)
    assert sum(1 for g in graphs if g.m >= g.n) >= 200  # mostly true G(n,p)
    graphs += [c.graph for c in family_constructions()]
    violations = []
    for i, g in enumerate(graphs):
        violations += check_graph_relations(g, {"graph": i, "n": g.n, "m": g.m})
    return violations


class TestCriterion1GridTightness:
    def test_staircase_and_centered_values(self):
        t0 = time.perf_counter()
        for k in (1, 2):
            c = staircase_grid(k)
            d = all_pairs_distances(c.graph)
            assert hyperbolicity_exact(d).value == k
            assert rooted_insize_dense(d, c.tree)[0] == 4 * k
        c = centered_grid(1)
        d = all_pairs_distances(c.graph)
        assert hyperbolicity_exact(d).value == 4
        assert rooted_insize_dense(d, c.tree)[0] <= 2
        c = centered_grid(2)
        d = all_pairs_distances(c.graph)
        assert rooted_insize_dense(d, c.tree)[0] <= 4
        assert time.perf_counter() - t0 < 60

    def test_staircase_k3(self):
        c = staircase_grid(3)
        d = all_pairs_distances(c.graph)
        assert hyperbolicity_exact(d).value == 3
        assert rooted_insize_dense(d, c.tree)[0] == 12

    def test_centered_k2_exact_delta(self):
        d = all_pairs_distances(centered_grid(2).graph)
        assert hyperbolicity_exact(d).value == 8


class TestCriterion2GluedLowerBound:
    def test_sampled_trees_and_budgeted_enumeration(self):
        c = glued_staircase(2)
        g = c.graph
        d = all_pairs_distances(g)
        rng = random.Random(CORPUS_SEED)
        for _ in range(1000):
            root = rng.randrange(g.n)
            dist = d[root].astype(np.int64)
            parent = np.full(g.n, -1, dtype=np.int64)
            for v in range(g.n):
                if v == root:
                    continue
                ups = [int(u) for u in g.neighbors(v) if dist[u] == dist[v] - 1]
                parent[v] = rng.choice(ups)
            tree = bfs_tree_from_parents(g, root, parent)
            rho, _ = rooted_insize_dense(d, tree)
            assert rho >= 6
        # systematic enumeration: the first 10^6 trees all stay >= 6 as well
        scanner = _TreeScanner(g, d)
        for _root, rho in scanner.scan(10**6):
            assert rho >= 6


class TestCriterion3ApproximationChain:
    def test_sandwich_holds_for_every_root(self, relation_violations):
        assert [v for v in relation_violations if v["check"] == "sandwich"] == []

    def test_sandwich_on_prescribed_family_trees(self):
        for c in family_constructions():
            d = all_pairs_distances(c.graph)
            delta2 = hyperbolicity_exact(d).value.doubled
            rho, _ = rooted_insize_dense(d, c.tree)
            assert 2 * rho <= 4 * delta2
            assert delta2 <= 2 * (2 * rho + 1)


class TestCriterion4OracleEquivalence:
    def test_full_oracle_battery(self):
        t0 = time.perf_counter()
        # (a) sparse route == dense route, values and witnesses, all roots
        for i, g in enumerate(sample_corpus(30, 25, CORPUS_SEED + 1)):
            assert check_sparse_dense(g, {"graph": i}) == []
        # (d) rho == mu on every graph/tree
        for g in sample_corpus(30, 20, CORPUS_SEED + 2):
            d = all_pairs_distances(g)
            for w in range(g.n):
                t = bfs(g, w)
                assert rooted_thinness_mu(d, t) == rooted_insize_dense(d, t)[0]
        # (b) thinness DP == definition-level scan
        for g in sample_corpus(200, 12, CORPUS_SEED + 3):
            assert thinness_exact(g).value == tau_brute(g)
        # (c) slimness triangle detection == geodesic enumeration
        for g in sample_corpus(200, 9, CORPUS_SEED + 4):
            assert slimness_exact(g).value == slimness_brute(g)
        # (e) exhausted tree-maximal insize == thinness
        done = 0
        for g in sample_corpus(120, 10, CORPUS_SEED + 5):
            if sum(count_bfs_trees(g, r) for r in range(g.n)) > 5000:
                continue
            mx, exhausted = maxsize_over_trees(g, budget=10**5)
            assert exhausted
            assert thinness_exact(g).value == mx
            done += 1
            if done >= 50:
                break
        assert done >= 50
        assert time.perf_counter() - t0 < 300


class TestCriterion5InequalitySuite:
    def test_all_chains_hold(self, relation_violations):
        bad = [
            v
            for v in relation_violations
            if v["check"] in ("chains", "mu-equals-rho", "pointed-delta")
        ]
        assert bad == []


class TestCriterion6SatReduction:
    def test_reduction_agrees_with_truth_tables(self):
        t0 = time.perf_counter()
        formulas = sat_corpus()
        assert len(formulas) >= 20
        n_sat = n_unsat = 0
        for phi in formulas:
            sat = sat_brute(phi)
            g, _ = sat_to_graph(preprocess_cnf(phi))
            rho_min, exhausted = minsize_search(
                g, budget=10**6, stop_at=1 if sat else None
            )
            assert (rho_min <= 1) == sat
            if sat:
                n_sat += 1
            else:
                assert exhausted  # the verdict "unsatisfiable" must be total
                n_unsat += 1
        assert n_sat >= 5 and n_unsat >= 5
        assert time.perf_counter() - t0 < 600


class TestCriterion7NoisyDistances:
    def test_noise_bounds_and_zero_noise_reduction(self, relation_violations):
        bad = [
            v
            for v in relation_violations
            if v["check"] in ("noisy-insize", "noise-free-reduces-to-rho")
        ]
        assert bad == []


class TestCriterion8PowerGraphDistances:
    def test_estimates_on_families_with_known_insize(self):
        cases = [(c.graph, c.tree) for c in family_constructions()]
        cases += [
            (g, bfs(g, 0))
            for g in (
                path_graph(12),
                cycle_graph(9),
                cycle_graph(10),
                star_graph(7),
                random_tree(15, 3),
            )
        ]
        for g, tree in cases:
            d = all_pairs_distances(g).astype(np.int64)
            rho, _ = rooted_insize_dense(d, tree)
            k = max(1, rho)
            dh = distances_from_power(power_graph(g, k), tree, k)
            assert (d <= dh + 1).all()
            assert (dh + 1 <= d + k + 1).all()


class TestCriterion9Performance:
    def test_dense_insize_5000(self):
        g = gnp_connected_fast(5000, 4.0, seed=90)
        d = all_pairs_distances(g)  # precomputed; not part of the budget
        t = bfs(g, 0)
        t0 = time.perf_counter()
        rooted_insize_dense(d, t)
        assert time.perf_counter() - t0 < 10

    def test_sparse_insize_2000(self):
        g = gnp_connected_fast(2000, 10.0, seed=91)
        assert abs(g.m - 10**4) < 500
        t0 = time.perf_counter()
        rooted_insize_sparse(g, 0)
        assert time.perf_counter() - t0 < 30

    def test_pointed_slimness_500(self):
        g = gnp_connected_fast(500, 8.0, seed=92)
        d = all_pairs_distances(g)
        t0 = time.perf_counter()
        pointed_slimness(d, g, 0)
        assert time.perf_counter() - t0 < 5
