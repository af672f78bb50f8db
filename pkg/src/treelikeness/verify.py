"""Self-check suites: relation chains, oracle agreement, extremal values.

Each suite returns a list of violation records (dicts with a message and
enough context to reproduce).  An empty list means the suite passed.  The
suites are reused by the command-line ``verify`` subcommand and by the test
battery.
"""

from __future__ import annotations

import math
import random

import numpy as np

from . import oracles
from .cnf import CnfFormula, preprocess_cnf, sat_to_graph
from .exact import hyperbolicity_exact, interval_thinness, pointed_hyperbolicity
from .generators import centered_grid, gen_family, glued_staircase, staircase_grid
from .graph import Graph, all_pairs_distances, bfs, bfs_tree_from_parents
from .insize import (
    count_bfs_trees,
    distances_from_power,
    minsize_search,
    power_graph,
    rooted_insize_approx_dist,
    rooted_insize_dense,
    rooted_insize_sparse,
    rooted_thinness_mu,
)
from .slimness import slimness_exact
from .thinness import collection_params, rho_all_roots, thinness_exact


def sample_corpus(num_graphs: int, max_n: int, seed: int) -> list[Graph]:
    """Seeded mixed corpus: G(n,p) skewed towards small n, some trees/cycles."""
    rng = random.Random(seed)
    graphs = []
    while len(graphs) < num_graphs:
        i = len(graphs)
        n = 4 + int((max_n - 4) * rng.random() ** 3)
        kind = rng.random()
        if kind < 0.1:
            graphs.append(gen_family("random-tree", n=n, seed=(seed << 12) + i))
        elif kind < 0.2:
            graphs.append(gen_family("cycle", n=max(3, n)))
        else:
            low = max(1.5 / n, 1.5 * math.log(n) / n)
            p = rng.uniform(low, 0.6)
            graphs.append(gen_family("gnp", n=n, p=p, seed=(seed << 16) + i))
    return graphs


def _chain(violations, label, ctx, *pairs):
    """pairs of (lhs_doubled, rhs_doubled, text); record lhs > rhs."""
    for lhs, rhs, text in pairs:
        if lhs > rhs:
            violations.append({"check": label, "detail": text, **ctx})


def check_graph_relations(g: Graph, ctx: dict, noise_levels=(1, 2, 3), seed: int = 0) -> list[dict]:
    """All provable relations between the parameters of one graph."""
    v: list[dict] = []
    d = all_pairs_distances(g)
    delta2 = hyperbolicity_exact(d).value.doubled
    tau2 = thinness_exact(g, d).value.doubled
    sigma2 = slimness_exact(g, d).value.doubled
    kappa2 = interval_thinness(d).value.doubled
    rhos = rho_all_roots(g, d)
    col = collection_params(g, d)
    _chain(
        v, "chains", ctx,
        (delta2 - 1, tau2, "delta - 1/2 <= tau"),
        (tau2, 4 * delta2, "tau <= 4*delta"),
        (sigma2, tau2, "sigma <= tau"),
        (tau2, 4 * sigma2, "tau <= 4*sigma"),
        (delta2 - 1, 2 * sigma2, "delta - 1/2 <= 2*sigma"),
        (2 * sigma2, 6 * delta2 + 2, "2*sigma <= 6*delta + 1"),
        (kappa2, tau2, "kappa <= tau"),
        (kappa2, 2 * delta2, "kappa <= 2*delta"),
        (kappa2, 2 * sigma2, "kappa <= 2*sigma"),
        (tau2, 2 * (col.rho + 2 * col.kappa), "tau <= rho_T + 2*kappa_T"),
        (col.rho + 2 * col.kappa, 3 * col.rho, "rho_T + 2*kappa_T <= 3*rho_T"),
        (2 * col.rho, tau2, "rho_T <= tau"),
        (sigma2, 2 * (col.rho + 2 * col.kappa), "sigma <= rho_T + 2*kappa_T"),
        (2 * (col.rho + 2 * col.kappa), 8 * sigma2, "rho_T + 2*kappa_T <= 8*sigma"),
    )
    for w, rho in enumerate(rhos):
        wctx = {**ctx, "root": w}
        _chain(
            v, "sandwich", wctx,
            (2 * rho, 4 * delta2, "rho <= 4*delta"),
            (delta2, 2 * (2 * rho + 1), "delta <= 2*rho + 1"),
            (tau2, 2 * (7 * rho + 4), "tau <= 7*rho + 4"),
            (tau2, 2 * (8 * rho + 4), "tau <= 8*rho + 4"),
            (sigma2, 2 * (6 * rho + 3), "sigma <= 6*rho + 3"),
        )
        tree = bfs(g, w)
        mu = rooted_thinness_mu(d, tree)
        if mu != rho:
            v.append({"check": "mu-equals-rho", "root": w, **ctx})
        # the pointed variant sandwiches the four-point value both ways
        dw2 = pointed_hyperbolicity(d, w).value.doubled
        if not (delta2 <= 2 * dw2 and dw2 <= 2 * delta2):
            v.append({"check": "pointed-delta", "root": w, "delta_w2": dw2, **ctx})
    # additive-noise estimates
    rng = np.random.default_rng(seed)
    tree = bfs(g, 0)
    root_row = d[0].astype(np.int64)
    for k in noise_levels:
        noise = rng.integers(0, k + 1, size=(g.n, g.n))
        noise = np.triu(noise, 1)
        dhat = d.astype(np.int64) + noise + noise.T
        rho_hat, upper = rooted_insize_approx_dist(dhat, k, tree, root_row)
        if not (delta2 <= upper.doubled and upper.doubled <= 8 * delta2 + 6 * k + 2):
            v.append({"check": "noisy-insize", "k": k, "rho_hat": rho_hat, **ctx})
    rho0, _ = rooted_insize_dense(d, tree)
    rh0, _ = rooted_insize_approx_dist(d.astype(np.int64), 0, tree, root_row)
    if rh0 != rho0:
        v.append({"check": "noise-free-reduces-to-rho", **ctx})
    return v


def check_sparse_dense(g: Graph, ctx: dict) -> list[dict]:
    v = []
    d = all_pairs_distances(g)
    for w in range(g.n):
        dense = rooted_insize_dense(d, bfs(g, w))
        sparse = rooted_insize_sparse(g, w)
        if dense != sparse:
            v.append({"check": "sparse-vs-dense", "root": w, "dense": dense, "sparse": sparse, **ctx})
    return v


def suite_inequalities(num_graphs: int = 60, max_n: int = 40, seed: int = 20) -> list[dict]:
    violations = []
    for i, g in enumerate(sample_corpus(num_graphs, max_n, seed)):
        ctx = {"graph": i, "n": g.n, "m": g.m, "seed": seed}
        violations += check_graph_relations(g, ctx)
    return violations


def suite_oracles(num_graphs: int = 50, max_n: int = 10, seed: int = 21) -> list[dict]:
    violations = []
    for i, g in enumerate(sample_corpus(num_graphs, max_n, seed)):
        ctx = {"graph": i, "n": g.n, "m": g.m, "seed": seed}
        d = all_pairs_distances(g)
        violations += check_sparse_dense(g, ctx)
        tau = thinness_exact(g, d).value
        if tau.doubled != 2 * oracles.tau_brute(g):
            violations.append({"check": "tau-dp-vs-brute", **ctx})
        if g.n <= 9:
            if slimness_exact(g, d).value.doubled != 2 * oracles.slimness_brute(g):
                violations.append({"check": "sigma-vs-brute", **ctx})
        if hyperbolicity_exact(d).value.doubled != oracles.delta_brute(g):
            violations.append({"check": "delta-vs-brute", **ctx})
    return violations


def suite_grids(samples: int = 100, seed: int = 22) -> list[dict]:
    violations = []
    for k in (1, 2):
        hk = staircase_grid(k)
        d = all_pairs_distances(hk.graph)
        if hyperbolicity_exact(d).value != k:
            violations.append({"check": "staircase-delta", "k": k})
        if rooted_insize_dense(d, hk.tree)[0] != 4 * k:
            violations.append({"check": "staircase-rho", "k": k})
    gk = centered_grid(1)
    d = all_pairs_distances(gk.graph)
    if hyperbolicity_exact(d).value != 4:
        violations.append({"check": "centered-delta", "k": 1})
    if rooted_insize_dense(d, gk.tree)[0] > 2:
        violations.append({"check": "centered-rho", "k": 1})
    hs = glued_staircase(2)
    d = all_pairs_distances(hs.graph)
    rng = random.Random(seed)
    g = hs.graph
    for _ in range(samples):
        root = rng.randrange(g.n)
        dist = d[root].astype(np.int64)
        parent = np.full(g.n, -1, dtype=np.int64)
        for vtx in range(g.n):
            if vtx == root:
                continue
            ups = [int(u) for u in g.neighbors(vtx) if dist[u] == dist[vtx] - 1]
            parent[vtx] = rng.choice(ups)
        tree = bfs_tree_from_parents(g, root, parent)
        rho, _ = rooted_insize_dense(d, tree)
        if rho < 4 * 2 - 2:
            violations.append({"check": "glued-minsize", "root": root, "rho": rho})
    return violations


def suite_sat(max_extra: int = 6, seed: int = 23, budget: int = 10**6) -> list[dict]:
    violations = []
    for i, phi in enumerate(sat_corpus()[: 6 + max_extra]):
        sat = oracles.sat_brute(phi)
        pre = preprocess_cnf(phi)
        g, _ = sat_to_graph(pre)
        rho_min, exhausted = minsize_search(g, budget=budget, stop_at=1 if sat else None)
        verdict = rho_min <= 1
        if verdict != sat or (not sat and not exhausted):
            violations.append(
                {"check": "sat-reduction", "formula": i, "sat": sat,
                 "rho_min": rho_min, "exhausted": exhausted}
            )
    return violations


def sat_corpus() -> list[CnfFormula]:
    """Frozen formula corpus: mixed verdicts, gadgets small enough that the
    unsatisfiable ones exhaust a 10^6-tree budget."""
    raw: list[tuple[int, list[list[int]]]] = [
        # the worked 2-variable example (needs the piercing transformation)
        (2, [[1, 2], [-1, -2]]),
        # unsatisfiable instances
        (2, [[1, 2], [1, -2], [-1, 2], [-1, -2]]),
        (3, [[-3, -1, 2], [-3, 1], [-2, -1], [-2, 1], [-2, 3], [2, 3]]),
        (3, [[-3, -2, 1], [-3, 1, 2], [-2, -1], [-2, 1, 3], [-1, 2], [1, 2]]),
        (3, [[-3, -1], [-3, -1, 2], [-3, 1], [-3, 1, 2], [-2, -1], [-1, 2, 3], [1, 3]]),
        (3, [[-3, -2, 1], [-3, 1, 2], [-3, 2], [-2, -1], [-2, 1, 3], [-1, 2, 3], [1, 2]]),
        (3, [[-3, -2, -1], [-3, -1, 2], [-3, 1], [-2, 1], [-2, 1, 3], [-1, 3], [1, 2, 3]]),
        (4, [[-4, -3], [-4, -3, 1], [-4, -1], [-4, 3], [-3, -1, 4], [-1, 3, 4], [1, 4]]),
        # satisfiable instances
        (3, [[-3, -2, 1], [-3, -1], [-1, 3], [1, 2], [2, 3]]),
        (3, [[-3, -2, -1], [-3, -2, 1], [-3, -1, 2], [-2, 1, 3], [-1, 2], [1, 2, 3]]),
        (3, [[-3, -2, -1], [-3, -2, 1], [-1, 2], [-1, 2, 3], [-1, 3], [1, 2, 3]]),
        (3, [[-3, -1, 2], [-3, 1], [-2, -1], [-2, -1, 3], [-2, 1, 3]]),
        (3, [[-3, -2, 1], [-3, -1, 2], [-1, 3], [1, 3]]),
        (3, [[-3, -2, -1], [-3, -2, 1], [-2, -1, 3], [-1, 3], [1, 2, 3]]),
        (3, [[-3, 1], [-2, -1], [-2, 1], [-2, 1, 3], [-1, 2, 3], [1, 3]]),
        (3, [[-3, 1], [-3, 2], [-2, 3], [-1, 3], [1, 3], [2, 3]]),
        (3, [[-3, -2, -1], [-2, 1], [-1, 2, 3], [1, 3]]),
        (3, [[-3, -2, 1], [-3, 2], [-2, -1], [-1, 2, 3]]),
        (4, [[1, 4], [-4, 3], [2, -3], [-2, -1]]),
        (4, [[-4, -1], [1, -3], [2, 3], [4, -2]]),
        (4, [[1, 3], [-2, -3], [4, -2], [-1, -3], [-4, -1]]),
        (5, [[-5, 3], [2, -1], [5, -2], [-3, 1], [4, 5]]),
        (6, [[-4, -2], [3, 4], [5, 3], [-3, 1], [6, -3], [2, 1], [-6, 3]]),
    ]
    return [CnfFormula.of(nv, cls) for nv, cls in raw]
