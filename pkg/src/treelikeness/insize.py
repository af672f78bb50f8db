"""Rooted insize rho_{w,T} and everything built on top of it.

rho_{w,T} = max over vertex pairs {x,y} of d(x_y, y_x), where x_y and y_x sit
on the tree paths from the root w to x and to y at depth floor((x|y)_w).
Computing it is quadratic given a distance matrix (dense route) or O(nm) with
only linear extra memory (sparse route); both return identical values and
witnesses.  rho sandwiches hyperbolicity: rho/4 <= delta <= 2*rho + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
import numpy as np
from scipy.sparse import csgraph

from .graph import (
    BfsTree,
    Graph,
    TooLargeError,
    TreeMismatchError,
    all_pairs_distances,
    ancestor_table,
    bfs,
)
from .halfint import HalfInt


class ApproxViolationError(ValueError):
    """An approximate distance matrix fails a sanity spot check."""


@dataclass(frozen=True)
class InsizeWitness:
    x: int
    y: int
    r: int
    x_y: int
    y_x: int
    dist: int


@dataclass(frozen=True)
class ApproxBounds:
    """Two-sided hyperbolicity estimate derived from a rooted insize."""

    rho: int
    lower: HalfInt  # delta >= rho/4, rounded up to the half-integer grid
    upper: HalfInt  # delta <= 2*rho + 1
    witness: InsizeWitness


def _check_tree(dist: np.ndarray, tree: BfsTree) -> None:
    if dist.shape[0] != tree.n:
        raise TreeMismatchError("tree size does not match distance matrix")
    if not np.array_equal(dist[tree.root].astype(np.int64), tree.depth.astype(np.int64)):
        raise TreeMismatchError("tree depths disagree with row of distance matrix")


def rooted_insize_dense(dist: np.ndarray, tree: BfsTree) -> tuple[int, InsizeWitness]:
    """O(n^2) rooted insize from a precomputed distance matrix."""
    _check_tree(dist, tree)
    d = dist.astype(np.int32, copy=False)
    n = d.shape[0]
    depth = tree.depth.astype(np.int32, copy=False)
    table = tree.ancestor_table()
    all_idx = np.arange(n)
    best = -1
    bx = by = 0
    for x in range(n):
        r = (depth[x] + depth - d[x]) >> 1
        a = table[x, r]
        b = table[all_idx, r]
        vals = d[a, b]
        local = int(vals.max())
        if local > best:
            best = local
            bx, by = x, int(vals.argmax())
    r = (int(depth[bx]) + int(depth[by]) - int(d[bx, by])) >> 1
    witness = InsizeWitness(
        x=bx, y=by, r=r,
        x_y=int(table[bx, r]), y_x=int(table[by, r]), dist=best,
    )
    return best, witness


def _euler_events(tree: BfsTree) -> list[int]:
    """DFS events over the tree: vertex id for a push, -1 for a pop.
    Children are visited in ascending id order."""
    n = tree.n
    children: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        p = int(tree.parent[v])
        if p >= 0:
            children[p].append(v)
    events: list[int] = []
    stack: list[tuple[int, bool]] = [(tree.root, False)]
    while stack:
        v, done = stack.pop()
        if done:
            events.append(-1)
            continue
        events.append(v)
        stack.append((v, True))
        for c in reversed(children[v]):
            stack.append((c, False))
    return events


def rooted_insize_sparse(g: Graph, w: int) -> tuple[int, InsizeWitness]:
    """O(nm)-time, O(n+m)-memory rooted insize on the deterministic BFS tree.

    Double depth-first traversal: the outer walk keeps, per depth layer, the
    distance from every vertex of that layer to the current vertex's ancestor
    at the same depth; the inner walk maintains the root path of the second
    endpoint so its path vertex at the meeting depth is a stack lookup.
    """
    tree = bfs(g, w)
    events = _euler_events(tree)
    depth = [int(t) for t in tree.depth]
    layers: list[list[int]] = [[] for _ in range(tree.height + 1)]
    for v in range(g.n):
        layers[depth[v]].append(v)
    layer_arrays = [np.array(vs, dtype=np.int64) for vs in layers]

    mat = g.csr()
    q = np.zeros(g.n, dtype=np.int32)
    best = -1
    bx = by = 0
    path: list[int] = []
    for x in events:
        if x < 0:
            continue
        dist_x = csgraph.dijkstra(mat, indices=x, unweighted=True).astype(np.int32)
        lay = layer_arrays[depth[x]]
        q[lay] = dist_x[lay]
        dx = depth[x]
        dlist = dist_x.tolist()
        qlist = q.tolist()
        del path[:]
        push = path.append
        for y in events:
            if y < 0:
                path.pop()
                continue
            push(y)
            r = (dx + depth[y] - dlist[y]) >> 1
            val = qlist[path[r]]
            if val > best:
                best = val
                bx, by = x, y
            elif val == best:
                lo, hi = (bx, by) if bx <= by else (by, bx)
                nlo, nhi = (x, y) if x <= y else (y, x)
                if (nlo, nhi) < (lo, hi):
                    bx, by = x, y
    if bx > by:
        bx, by = by, bx
    # recover positions for the witness
    dist_bx = csgraph.dijkstra(mat, indices=bx, unweighted=True).astype(np.int32)
    r = (depth[bx] + depth[by] - int(dist_bx[by])) >> 1
    witness = InsizeWitness(
        x=bx, y=by, r=r,
        x_y=tree.path_vertex(bx, r), y_x=tree.path_vertex(by, r), dist=best,
    )
    return best, witness


def approx_hyperbolicity(g: Graph, w: int) -> ApproxBounds:
    """Linear-memory two-sided estimate: rho/4 <= delta <= 2*rho + 1."""
    rho, witness = rooted_insize_sparse(g, w)
    # rho/4 may fall between half-integers; delta is a half-integer, so
    # rounding the lower bound up to the grid keeps it valid.
    lower = HalfInt((rho + 1) // 2)
    upper = HalfInt.whole(2 * rho + 1)
    return ApproxBounds(rho=rho, lower=lower, upper=upper, witness=witness)


def rooted_thinness_mu(dist: np.ndarray, tree: BfsTree) -> int:
    """mu_{w,T}: like rho but maximized over every common depth r below the
    Gromov product, not just the deepest one.  Provably equal to rho."""
    _check_tree(dist, tree)
    d = dist.astype(np.int32, copy=False)
    depth = tree.depth.astype(np.int32, copy=False)
    table = tree.ancestor_table()
    rmax = (depth[:, None] + depth[None, :] - d) >> 1
    best = 0
    for r in range(table.shape[1]):
        alive = rmax >= r
        if not alive.any():
            break
        a = table[:, r]
        vals = d[np.ix_(a, a)]
        local = int(vals[alive].max())
        if local > best:
            best = local
    return best


def rooted_insize_approx_dist(
    dist_hat: np.ndarray, k: int, tree: BfsTree, root_row: np.ndarray
) -> tuple[int, HalfInt]:
    """Rooted insize from k-additively-distorted distances.

    ``root_row`` must hold exact distances from the root.  Positions are taken
    at floor of the estimated Gromov product (clamped at zero).  Returns
    (rho_hat, upper) with delta <= upper = 2*rho_hat + k + 1; moreover
    2*rho_hat + k + 1 <= 8*delta + 3*k + 1.
    """
    dhat = np.asarray(dist_hat).astype(np.int64, copy=False)
    n = dhat.shape[0]
    depth = np.asarray(root_row).astype(np.int64, copy=False)
    if not np.array_equal(depth, tree.depth.astype(np.int64)):
        raise TreeMismatchError("root_row disagrees with tree depths")
    # spot check: an approximate distance can never undercut the root-row gap
    rng = np.random.default_rng(0)
    xs = rng.integers(0, n, size=min(4 * n, 4096))
    ys = rng.integers(0, n, size=len(xs))
    if (dhat[xs, ys] < np.abs(depth[xs] - depth[ys])).any():
        raise ApproxViolationError("estimated distance below trivial lower bound")
    if (dhat != dhat.T).any() or (np.diag(dhat) != 0).any():
        raise ApproxViolationError("estimated distance matrix is not a metric table")
    table = tree.ancestor_table()
    all_idx = np.arange(n)
    best = -1
    for x in range(n):
        r = (depth[x] + depth - dhat[x]) >> 1
        np.clip(r, 0, None, out=r)
        vals = dhat[table[x, r], table[all_idx, r]]
        local = int(vals.max())
        if local > best:
            best = local
    return best, HalfInt.whole(2 * best + k + 1)


def power_graph(g: Graph, k: int) -> Graph:
    """G^k: same vertices, edge when the distance in G is between 1 and k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    d = all_pairs_distances(g)
    n = g.n
    edges = []
    for u in range(n):
        close = np.flatnonzero((d[u] <= k) & (np.arange(n) > u))
        edges.extend((u, int(v)) for v in close)
    return Graph(n, edges)


def distances_from_power(gk: Graph, tree: BfsTree, k: int) -> np.ndarray:
    """Additive-O(k) distance estimates using only adjacency in G^k.

    Walk both root paths down in lockstep while the two path vertices stay
    within distance k (tested as adjacency in G^k); stopping at depth r gives
    d_hat(x,y) = d(x, x(r)) + k + d(y, y(r)).  When k >= rho the estimate
    satisfies d <= d_hat <= d + k + 1 (the surplus k + 1 is attained).
    """
    n = gk.n
    if tree.n != n:
        raise TreeMismatchError("tree size does not match power graph")
    adj = gk.adjacency_matrix()
    np.fill_diagonal(adj, True)
    table = tree.ancestor_table()
    height = table.shape[1] - 1
    depth = tree.depth.astype(np.int64)
    alive = np.ones((n, n), dtype=bool)
    r_stop = np.zeros((n, n), dtype=np.int64)
    for r in range(1, height + 1):
        a = table[:, r]
        alive &= adj[np.ix_(a, a)]
        if not alive.any():
            break
        r_stop += alive
    dhat = np.maximum(depth[:, None] - r_stop, 0) + k + np.maximum(depth[None, :] - r_stop, 0)
    np.fill_diagonal(dhat, 0)
    return dhat


def _parent_choices(dist_row: np.ndarray, g: Graph, root: int) -> list[np.ndarray]:
    choices = []
    for v in range(g.n):
        if v == root:
            choices.append(np.array([-1], dtype=np.int32))
            continue
        nb = g.neighbors(v)
        choices.append(nb[dist_row[nb] == dist_row[v] - 1].astype(np.int32))
    return choices


def count_bfs_trees(g: Graph, root: int, dist_row: np.ndarray | None = None) -> int:
    if dist_row is None:
        dist_row = all_pairs_distances(g)[root]
    total = 1
    for ch in _parent_choices(np.asarray(dist_row), g, root):
        total *= len(ch)
    return total


class _TreeScanner:
    """Shared core of minsize/maxsize: enumerate all BFS trees of all roots in
    deterministic mixed-radix order and stream each tree's rho."""

    def __init__(self, g: Graph, dist: np.ndarray | None = None):
        self.g = g
        self.dist = all_pairs_distances(g) if dist is None else dist
        self.d32 = self.dist.astype(np.int32)

    def scan(self, budget: int, roots=None):
        """Yield (root, rho) per enumerated tree; stops after ``budget`` trees.

        Trees are enumerated per root in mixed-radix order over the parent
        choices, with vertices ordered by (depth, id) and the deepest varying
        fastest.  That order lets each increment rebuild only the ancestor-
        table rows from the first changed digit onward (everything shallower
        is untouched).  The generator's ``exhausted`` attribute is set when it
        finishes.
        """
        g, d = self.g, self.d32
        n = g.n
        self.exhausted = False
        seen = 0
        all_idx = np.arange(n)
        dflat = d.ravel()
        for root in roots if roots is not None else range(n):
            depth = d[root]
            height = int(depth.max())
            hp1 = height + 1
            rtab = (depth[:, None] + depth[None, :] - d) >> 1
            choices = _parent_choices(depth, g, root)
            order = [int(v) for v in np.argsort(depth, kind="stable")[1:]]
            radix = [len(choices[v]) for v in order]
            opts = [[int(p) for p in choices[v]] for v in order]
            depth_of = [int(depth[v]) for v in order]
            k = len(order)
            table = np.empty((n, hp1), dtype=np.int32)
            table[root, :] = root
            # flat gather indices: a[x,y] = table[x, rtab[x,y]] and the
            # transposed counterpart, both over the raveled table
            af = (all_idx[:, None] * hp1 + rtab).ravel()
            bf = (all_idx[None, :] * hp1 + rtab).ravel()
            digits = [0] * k
            rebuild_from = 0
            while True:
                if seen >= budget:
                    return
                for i in range(rebuild_from, k):
                    v = order[i]
                    table[v, :] = table[opts[i][digits[i]]]
                    table[v, depth_of[i]:] = v
                seen += 1
                tflat = table.ravel()
                a = tflat.take(af)
                b = tflat.take(bf)
                yield root, int(dflat.take(a * n + b).max())
                # odometer increment: deepest digit first
                i = k - 1
                while i >= 0 and digits[i] + 1 >= radix[i]:
                    digits[i] = 0
                    i -= 1
                if i < 0:
                    break
                digits[i] += 1
                rebuild_from = i
        self.exhausted = True


def minsize_search(
    g: Graph,
    budget: int = 10**6,
    dist: np.ndarray | None = None,
    stop_at: int | None = None,
) -> tuple[int, bool]:
    """Search for the tree-minimal rooted insize rho_- by enumeration.

    Returns (best rho found, exhausted).  The value is exact iff exhausted.
    ``stop_at`` allows an early exit once a tree at or below the threshold has
    been found (useful when only the decision "rho_- <= t" matters).
    """
    scanner = _TreeScanner(g, dist)
    best = None
    gen = scanner.scan(budget)
    for _root, rho in gen:
        if best is None or rho < best:
            best = rho
            if stop_at is not None and best <= stop_at:
                gen.close()
                return best, False
    if best is None:
        raise TooLargeError("budget too small to enumerate a single tree")
    return best, scanner.exhausted


def maxsize_over_trees(
    g: Graph, budget: int = 10**6, dist: np.ndarray | None = None
) -> tuple[int, bool]:
    """Tree-maximal rooted insize rho_+ by enumeration.  When the enumeration
    exhausts, the result equals the thinness of the graph."""
    scanner = _TreeScanner(g, dist)
    best = -1
    for _root, rho in scanner.scan(budget):
        if rho > best:
            best = rho
    if best < 0:
        raise TooLargeError("budget too small to enumerate a single tree")
    return best, scanner.exhausted
