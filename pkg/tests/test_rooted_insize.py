import numpy as np
import pytest

from treelikeness import (
    ApproxViolationError,
    all_pairs_distances,
    approx_hyperbolicity,
    bfs,
    count_bfs_trees,
    distances_from_power,
    hyperbolicity_exact,
    maxsize_over_trees,
    minsize_search,
    power_graph,
    rooted_insize_approx_dist,
    rooted_insize_dense,
    rooted_insize_sparse,
    rooted_thinness_mu,
    thinness_exact,
)
from treelikeness.generators import cycle_graph, path_graph
from treelikeness.graph import TreeMismatchError
from treelikeness.oracles import maxsize_brute, minsize_brute, rho_tree_brute
from treelikeness.verify import sample_corpus


def corpus(num, max_n, seed):
    return sample_corpus(num, max_n, seed)


class TestDense:
    def test_canonical_values(self, canon_case):
        g, d = canon_case["graph"], canon_case["dist"]
        rho, wit = rooted_insize_dense(d, bfs(g, 0))
        assert rho == canon_case["rho_0"]
        # the witness certifies the value
        assert int(d[wit.x_y, wit.y_x]) == rho == wit.dist

    def test_matches_path_walk_brute(self):
        for i, g in enumerate(corpus(25, 14, 101)):
            d = all_pairs_distances(g)
            for w in range(g.n):
                t = bfs(g, w)
                rho, _ = rooted_insize_dense(d, t)
                assert rho == rho_tree_brute(g, w, [int(p) for p in t.parent])

    def test_witness_vertices_sit_on_tree_paths(self):
        g = cycle_graph(9)
        d = all_pairs_distances(g)
        t = bfs(g, 0)
        rho, wit = rooted_insize_dense(d, t)
        assert t.path_vertex(wit.x, wit.r) == wit.x_y
        assert t.path_vertex(wit.y, wit.r) == wit.y_x
        assert wit.r == (int(t.depth[wit.x]) + int(t.depth[wit.y]) - int(d[wit.x, wit.y])) // 2

    def test_rejects_mismatched_tree(self):
        g = cycle_graph(6)
        d = all_pairs_distances(g)
        with pytest.raises(TreeMismatchError):
            rooted_insize_dense(d, bfs(path_graph(6), 0))


class TestSparseEqualsDense:
    def test_values_and_witnesses_agree_everywhere(self):
        for g in corpus(30, 25, 102):
            d = all_pairs_distances(g)
            for w in range(g.n):
                dense = rooted_insize_dense(d, bfs(g, w))
                sparse = rooted_insize_sparse(g, w)
                assert dense == sparse


class TestMuEqualsRho:
    def test_all_roots(self):
        for g in corpus(25, 22, 103):
            d = all_pairs_distances(g)
            for w in range(g.n):
                t = bfs(g, w)
                assert rooted_thinness_mu(d, t) == rooted_insize_dense(d, t)[0]


class TestSandwich:
    def test_bounds_bracket_exact_delta(self):
        for g in corpus(25, 20, 104):
            delta = hyperbolicity_exact(all_pairs_distances(g)).value
            for w in range(0, g.n, max(1, g.n // 5)):
                b = approx_hyperbolicity(g, w)
                assert b.lower <= delta <= b.upper
                assert b.upper.doubled == 2 * (2 * b.rho + 1)
                # lower bound is rho/4 rounded up to the half-integer grid
                assert b.lower.doubled == (b.rho + 1) // 2


class TestNoisyDistances:
    def test_guarantee_and_zero_noise_reduction(self):
        rng = np.random.default_rng(7)
        for g in corpus(20, 20, 105):
            d = all_pairs_distances(g).astype(np.int64)
            delta2 = hyperbolicity_exact(d).value.doubled
            t = bfs(g, 0)
            root_row = d[0]
            rho, _ = rooted_insize_dense(d, t)
            rh0, up0 = rooted_insize_approx_dist(d, 0, t, root_row)
            assert rh0 == rho
            for k in (1, 2, 3):
                noise = np.triu(rng.integers(0, k + 1, size=d.shape), 1)
                dhat = d + noise + noise.T
                _, upper = rooted_insize_approx_dist(dhat, k, t, root_row)
                assert delta2 <= upper.doubled <= 8 * delta2 + 6 * k + 2

    def test_rejects_asymmetric_estimates(self):
        g = cycle_graph(8)
        d = all_pairs_distances(g).astype(np.int64)
        t = bfs(g, 0)
        bad = d.copy()
        bad[1, 5] += 1  # symmetry broken
        with pytest.raises(ApproxViolationError):
            rooted_insize_approx_dist(bad, 1, t, d[0])

    def test_rejects_underestimates(self):
        g = cycle_graph(8)
        d = all_pairs_distances(g).astype(np.int64)
        t = bfs(g, 0)
        bad = d.copy()
        bad[0, 4] = bad[4, 0] = 1  # below the depth gap certified by the tree
        with pytest.raises(ApproxViolationError):
            rooted_insize_approx_dist(bad, 1, t, d[0])


class TestPowerGraphDistances:
    def test_power_graph_edges(self):
        g = path_graph(6)
        g2 = power_graph(g, 2)
        d = all_pairs_distances(g)
        for u in range(6):
            for v in range(u + 1, 6):
                assert (v in set(map(int, g2.neighbors(u)))) == (d[u, v] <= 2)

    def test_estimate_guarantee_random_graphs(self):
        # with k >= rho: d <= d_hat <= d + k + 1, and the upper slack is tight
        tight = False
        for g in corpus(20, 20, 106):
            d = all_pairs_distances(g).astype(np.int64)
            t = bfs(g, 0)
            rho, _ = rooted_insize_dense(d, t)
            k = max(1, rho)
            dh = distances_from_power(power_graph(g, k), t, k)
            assert (d <= dh).all()
            assert (dh <= d + k + 1).all()
            tight |= bool((dh == d + k + 1).any())
        assert tight  # the +k+1 slack is actually attained somewhere


class TestTreeEnumeration:
    def test_count_matches_enumeration(self):
        g = cycle_graph(6)
        for r in range(g.n):
            n_trees = count_bfs_trees(g, r)
            assert n_trees == 2  # the antipode picks one of two parents

    def test_minsize_maxsize_match_brute(self):
        done = 0
        for g in corpus(40, 9, 107):
            if sum(count_bfs_trees(g, r) for r in range(g.n)) > 3000:
                continue
            mn, ex1 = minsize_search(g, budget=10**5)
            mx, ex2 = maxsize_over_trees(g, budget=10**5)
            assert ex1 and ex2
            assert mn == minsize_brute(g)
            assert mx == maxsize_brute(g)
            done += 1
        assert done >= 15

    def test_exhausted_maxsize_equals_thinness(self):
        for g in corpus(25, 9, 108):
            if sum(count_bfs_trees(g, r) for r in range(g.n)) > 3000:
                continue
            mx, exhausted = maxsize_over_trees(g, budget=10**5)
            assert exhausted
            assert thinness_exact(g).value == mx

    def test_stop_at_early_exit(self):
        g = cycle_graph(8)
        best, exhausted = minsize_search(g, budget=10**5, stop_at=10)
        assert best <= 10 and not exhausted

    def test_budget_truncation_reported(self):
        g = cycle_graph(10)
        _, exhausted = minsize_search(g, budget=3)
        assert not exhausted
