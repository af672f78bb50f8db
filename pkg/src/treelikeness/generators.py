"""Extremal constructions and reusable graph families.

The three grid-based constructions pin down how loose the rho-vs-delta
sandwich can get:

* staircase_grid (H_k): delta = k yet the boundary tree has rho = 4k,
* centered_grid (G_k): delta = 4k yet the zigzag tree has rho <= 2k,
* glued_staircase (H*_k): every BFS tree of every root has rho >= 4k - 2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .graph import Graph, bfs, bfs_distances, bfs_tree_from_parents, BfsTree


@dataclass(frozen=True)
class GridConstruction:
    graph: Graph
    tree: BfsTree
    labels: dict
    coords: dict  # vertex id -> (i, j) pair (copy index included for glued)


def _grid_graph(points: set[tuple[int, int]], first: tuple[int, int]) -> tuple[Graph, dict, dict]:
    """4-neighbor grid graph on ``points``; ``first`` gets vertex id 0."""
    rest = sorted(points - {first})
    order = [first] + rest
    vid = {p: i for i, p in enumerate(order)}
    edges = []
    for (i, j), a in vid.items():
        for q in ((i + 1, j), (i, j + 1)):
            if q in vid:
                edges.append((a, vid[q]))
    g = Graph(len(order), edges)
    return g, vid, {i: p for p, i in vid.items()}


def staircase_grid(k: int) -> GridConstruction:
    """H_k: the (2k+1)x(2k+1)-vertex square grid minus the k x k vertex block
    in the corner opposite to the root, with the boundary tree.

    With w = (0, 2k) top-left and the block {i >= k+1, j <= k-1} removed, the
    corners x = (k, 0) and y = (2k, k) satisfy d(w,x) = d(w,y) = 3k and
    d(x,y) = 2k; the tree contains both boundary paths w -> x (via (0,0)) and
    w -> y (via (2k,2k)), which forces rho_{w,T} = 4k while delta(H_k) = k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    points = {
        (i, j)
        for i in range(2 * k + 1)
        for j in range(2 * k + 1)
        if not (i >= k + 1 and j <= k - 1)
    }
    w = (0, 2 * k)
    g, vid, coords = _grid_graph(points, w)
    dist_w = bfs_distances(g, vid[w])
    x, y = (k, 0), (2 * k, k)
    assert dist_w[vid[x]] == 3 * k, "boundary corner x must sit at distance 3k"
    assert dist_w[vid[y]] == 3 * k, "boundary corner y must sit at distance 3k"
    assert bfs_distances(g, vid[x])[vid[y]] == 2 * k, "corners must be 2k apart"

    parent = {}
    for j in range(2 * k):
        parent[(0, j)] = (0, j + 1)  # left column, down towards (0,0)
    for i in range(1, k + 1):
        parent[(i, 0)] = (i - 1, 0)  # bottom row out to x
    for i in range(1, 2 * k + 1):
        parent[(i, 2 * k)] = (i - 1, 2 * k)  # top row towards (2k,2k)
    for j in range(k, 2 * k):
        parent[(2 * k, j)] = (2 * k, j + 1)  # right column down to y
    parr = np.full(g.n, -1, dtype=np.int32)
    for p in sorted(points):
        v = vid[p]
        if p == w:
            continue
        if p in parent:
            parr[v] = vid[parent[p]]
        else:
            nb = g.neighbors(v)
            up = nb[dist_w[nb] == dist_w[v] - 1]
            parr[v] = up[0]
    tree = bfs_tree_from_parents(g, vid[w], parr)
    labels = {
        "w": vid[w], "x": vid[x], "y": vid[y],
        "x_y": vid[(0, 0)], "y_x": vid[(2 * k, 2 * k)],
    }
    return GridConstruction(graph=g, tree=tree, labels=labels, coords=coords)


def _zigzag_parent(i: int, j: int) -> tuple[int, int]:
    si = 1 if i > 0 else -1
    sj = 1 if j > 0 else -1
    a, b = abs(i), abs(j)
    if a < b or (a == b and b > 0):
        return (i, j - sj)
    return (i - si, j)


def centered_grid(k: int) -> GridConstruction:
    """G_k: the (4k+1)x(4k+1)-vertex square grid centered at the root, with
    the zigzag tree.  delta(G_k) = 4k but rho_{w,T} <= 2k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    points = {(i, j) for i in range(-2 * k, 2 * k + 1) for j in range(-2 * k, 2 * k + 1)}
    w = (0, 0)
    g, vid, coords = _grid_graph(points, w)
    parr = np.full(g.n, -1, dtype=np.int32)
    for p in points:
        if p == w:
            continue
        parr[vid[p]] = vid[_zigzag_parent(*p)]
    tree = bfs_tree_from_parents(g, vid[w], parr)
    return GridConstruction(graph=g, tree=tree, labels={"w": vid[w]}, coords=coords)


def glued_staircase(k: int) -> GridConstruction:
    """H*_k: two copies of H_k with the deep boundary corners (0,0) and
    (2k,2k) dissolved (their neighbors made pairwise adjacent), glued at the
    root.  Every BFS tree of every root has insize at least 4k - 2."""
    if k < 2:
        raise ValueError("k must be >= 2 for the glued construction")
    base = {
        (i, j)
        for i in range(2 * k + 1)
        for j in range(2 * k + 1)
        if not (i >= k + 1 and j <= k - 1)
    }
    w = (0, 2 * k)
    removed = {(0, 0), (2 * k, 2 * k)}
    kept = sorted(base - removed - {w})
    vid = {("w",): 0}
    coords = {0: ("w",)}
    for copy in (0, 1):
        for p in kept:
            vid[(copy, p)] = len(coords)
            coords[len(coords)] = (copy, p)

    def node(copy, p):
        return 0 if p == w else vid[(copy, p)]

    edges = set()
    for copy in (0, 1):
        for p in kept:
            i, j = p
            for q in ((i + 1, j), (i, j + 1)):
                if q in base and q not in removed and q != w:
                    edges.add((node(copy, p), node(copy, q)))
        # root edges and dissolved-corner cliques
        for q in ((1, 2 * k), (0, 2 * k - 1)):
            edges.add((0, node(copy, q)))
        for a, b in (((0, 1), (1, 0)), ((2 * k - 1, 2 * k), (2 * k, 2 * k - 1))):
            edges.add((node(copy, a), node(copy, b)))
    g = Graph(len(coords), list(edges))
    labels = {
        "w": 0,
        "x0": vid[(0, (k, 0))], "y0": vid[(0, (2 * k, k))],
        "x1": vid[(1, (k, 0))], "y1": vid[(1, (2 * k, k))],
    }
    return GridConstruction(graph=g, tree=bfs(g, 0), labels=labels, coords=coords)


# ---------------------------------------------------------------------------
# plain families for tests and corpora


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(n: int) -> Graph:
    return Graph(n, [(0, i) for i in range(1, n)])


def random_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return Graph(max(n, 1), edges)


def gnp_connected(n: int, p: float, seed: int) -> Graph:
    """Seeded Erdos-Renyi graph, resampled (with derived seeds) until
    connected."""
    for attempt in range(1000):
        rng = random.Random((seed << 10) ^ attempt)
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
        ]
        try:
            return Graph(n, edges)
        except Exception:
            continue
    raise RuntimeError("could not sample a connected graph; raise p")


def gnp_connected_fast(n: int, avg_deg: float, seed: int) -> Graph:
    """Large sparse connected G(n,p) built on a random spanning tree plus
    Bernoulli extra edges, for performance smoke tests."""
    rng = random.Random(seed)
    edges = set()
    for i in range(1, n):
        edges.add((rng.randrange(i), i))
    extra = int(n * avg_deg / 2) - len(edges)
    while extra > 0:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        e = (u, v) if u < v else (v, u)
        if e not in edges:
            edges.add(e)
            extra -= 1
    return Graph(n, list(edges))


FAMILIES = {
    "path": lambda n, **kw: path_graph(n),
    "cycle": lambda n, **kw: cycle_graph(n),
    "complete": lambda n, **kw: complete_graph(n),
    "star": lambda n, **kw: star_graph(n),
    "random-tree": lambda n, seed=0, **kw: random_tree(n, seed),
    "gnp": lambda n, p=0.3, seed=0, **kw: gnp_connected(n, p, seed),
}


def gen_family(name: str, **params) -> Graph:
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; known: {sorted(FAMILIES)}")
    return FAMILIES[name](**params)
