"""Graph thinness via dynamic programming.

The pointed thinness tau_x is the largest d(y', z') over vertices y', z' that
lie on shortest paths from x to some y and z and share a distance layer not
deeper than the Gromov product (y|z)_x.  Two O(nm) tables make this
quadratic-per-root:

* g[w, y]: deepest-layer spread reachable for the pair (x, y) when the layer
  is d(x, w) and the partner on the (x,y)-side is as far from w as possible;
* h[y, w]: the largest Gromov product (y|w')_x over descendants w' of w in
  the layered order, which tells whether layer d(x, w) is admissible.

tau(G) = max_x tau_x, and tau equals both the insize and the tree-maximal
rooted insize of the graph.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exact import ParamReport
from .graph import Graph, all_pairs_distances, bfs
from .halfint import HalfInt
from .insize import rooted_insize_dense


def g_table(dist: np.ndarray, g: Graph, x: int) -> np.ndarray:
    """g[w, y] = max d(w, y') over y' in I(x, y) with d(x, y') = d(x, w),
    or 0 when d(x, y) < d(x, w)."""
    d = dist.astype(np.int32, copy=False)
    n = d.shape[0]
    dx = d[x]
    out = np.zeros((n, n), dtype=np.int32)
    order = np.argsort(dx, kind="stable")
    for y in order:
        y = int(y)
        if dx[y] > 0:
            nb = g.neighbors(y)
            closer = nb[dx[nb] == dx[y] - 1]
            out[:, y] = out[:, closer].max(axis=1)
        eq = dx == dx[y]
        out[eq, y] = d[eq, y]
    return out


def h_table(dist: np.ndarray, g: Graph, x: int) -> np.ndarray:
    """h2[y, w] = doubled max Gromov product (y|w')_x over w' reachable from w
    by strictly layer-increasing edges (w itself included)."""
    d = dist.astype(np.int32, copy=False)
    n = d.shape[0]
    dx = d[x]
    out = np.empty((n, n), dtype=np.int32)
    order = np.argsort(-dx, kind="stable")
    for w in order:
        w = int(w)
        col = dx + dx[w] - d[:, w]
        nb = g.neighbors(w)
        deeper = nb[dx[nb] == dx[w] + 1]
        if len(deeper):
            col = np.maximum(col, out[:, deeper].max(axis=1))
        out[:, w] = col
    return out


def pointed_thinness(dist: np.ndarray, g: Graph, x: int) -> tuple[int, tuple]:
    """tau_x plus a witness (y, z', y') with d(y', z') = tau_x."""
    d = dist.astype(np.int32, copy=False)
    dx = d[x]
    gt = g_table(dist, g, x)
    h2 = h_table(dist, g, x)
    cond = (2 * dx[:, None]) <= h2.T  # cond[w, y]
    vals = np.where(cond, gt, -1)
    best = int(vals.max())
    w0, y0 = np.unravel_index(int(vals.argmax()), vals.shape)
    w0, y0 = int(w0), int(y0)
    # recover y': deepest-from-w0 vertex of I(x, y0) in layer d(x, w0)
    layer = np.flatnonzero(
        (dx == dx[w0]) & (dx + d[:, y0] == dx[y0])
    )
    yprime = int(layer[d[layer, w0].argmax()]) if len(layer) else y0
    return best, (y0, w0, yprime)


def thinness_exact(g: Graph, dist: np.ndarray | None = None) -> ParamReport:
    """tau(G) in O(n^2 m) time."""
    d = all_pairs_distances(g) if dist is None else dist
    best = -1
    witness = (0, 0, 0, 0)
    for x in range(g.n):
        val, (y, zp, yp) = pointed_thinness(d, g, x)
        if val > best:
            best = val
            witness = (x, y, yp, zp)
    return ParamReport("tau", HalfInt.whole(best), witness, "layer-dp")


def check_tau_witness(dist: np.ndarray, witness, value: HalfInt) -> bool:
    x, y, yp, zp = witness
    d = dist
    on_xy = int(d[x, yp]) + int(d[yp, y]) == int(d[x, y])
    same_layer = int(d[x, yp]) == int(d[x, zp])
    return on_xy and same_layer and HalfInt.whole(int(d[yp, zp])) == value


@dataclass(frozen=True)
class CollectionBounds:
    """Parameters of the collection of all deterministic BFS trees."""

    rho: int       # max over roots w of rho_{w, T_w}
    kappa: int     # max over roots and targets of the path-layer spread
    tau_upper: int    # tau  <= rho + 2*kappa
    sigma_upper: int  # sigma <= rho + 2*kappa


def collection_params(g: Graph, dist: np.ndarray | None = None) -> CollectionBounds:
    d = (all_pairs_distances(g) if dist is None else dist).astype(np.int32, copy=False)
    n = g.n
    idx = np.arange(n)
    rho = 0
    kappa = 0
    for w in range(n):
        tree = bfs(g, w)
        val, _ = rooted_insize_dense(d, tree)
        rho = max(rho, val)
        dw = d[w]
        table = tree.ancestor_table()
        # kappa_{T_w}(w, v) = max over a in I(w, v) of d(a, path vertex of v
        # at depth d(w, a))
        onpath = dw[:, None] + d == dw[None, :]  # onpath[a, v]
        proj = table[idx[:, None], np.minimum(dw[None, :], table.shape[1] - 1)]
        # proj[v, a] = vertex at depth d(w, a) on the tree path to v
        vals = d[proj, idx[None, :]]
        vals = np.where(onpath.T, vals, 0)
        kappa = max(kappa, int(vals.max()))
    bound = rho + 2 * kappa
    return CollectionBounds(rho=rho, kappa=kappa, tau_upper=bound, sigma_upper=bound)


def rho_all_roots(g: Graph, dist: np.ndarray | None = None) -> list[int]:
    """rho_{w, T_w} for every root w with the deterministic BFS tree."""
    d = all_pairs_distances(g) if dist is None else dist
    return [rooted_insize_dense(d, bfs(g, w))[0] for w in range(g.n)]
