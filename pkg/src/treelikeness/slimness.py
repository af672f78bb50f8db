"""Graph slimness.

sigma_w is the least k such that no pair x, y with w on a shortest (x,y)-path
admits a z whose shortest paths to x and to y can both stay further than k
from w.  The farthest-avoidance values p_w(y, z) satisfy a simple recursion
over pairs ordered by distance, and the existence test for a bad triple
(x, y, z) at level k is a triangle search in an auxiliary tripartite graph,
done here with boolean matrix products.  sigma(G) = max_w sigma_w.
"""

from __future__ import annotations

import numpy as np

from .exact import ParamReport
from .graph import Graph, all_pairs_distances
from .halfint import HalfInt


def projection_table(dist: np.ndarray, g: Graph, w: int) -> np.ndarray:
    """p[y, z] = max over shortest (y,z)-paths P of min over u in P of d(w, u).

    Computed by increasing d(y, z): a path from y must enter the interval at a
    neighbor one step closer to z.
    """
    d = dist.astype(np.int32, copy=False)
    n = d.shape[0]
    dw = d[w]
    p = np.zeros((n, n), dtype=np.int32)
    p[np.arange(n), np.arange(n)] = dw
    maxd = int(d.max())
    for ell in range(1, maxd + 1):
        for y in range(n):
            zs = np.flatnonzero(d[y] == ell)
            if len(zs) == 0:
                continue
            nb = g.neighbors(y)
            step = d[np.ix_(nb, zs)] == ell - 1
            vals = np.where(step, p[np.ix_(nb, zs)], -1).max(axis=0)
            p[y, zs] = np.minimum(dw[y], vals)
    return p


def _triangle(dist, dw, p, k):
    """Find (x, y, z) with w in I(x,y), p[x,z] > k, p[y,z] > k; None if none."""
    mid = (dw[:, None] + dw[None, :]) == dist
    mid[np.diag_indices_from(mid)] = False
    far = p > k
    counts = far.astype(np.uint16) @ far.astype(np.uint16).T
    hits = mid & (counts > 0)
    if not hits.any():
        return None
    x, y = np.unravel_index(int(hits.argmax()), hits.shape)
    z = int(np.flatnonzero(far[x] & far[y])[0])
    return int(x), int(y), int(z)


def pointed_slimness(dist: np.ndarray, g: Graph, w: int) -> tuple[int, tuple]:
    """sigma_w with a witness triple (x, y, z) certifying sigma_w - 1 fails."""
    d = dist.astype(np.int32, copy=False)
    dw = d[w]
    p = projection_table(dist, g, w).copy()
    p[:, w] = -1  # z ranges over V \ {w}
    p[w, :] = -1
    if _triangle(d, dw, p, 0) is None:
        return 0, (w, w, w)
    # one-sided search: double until clean, then bisect for the least clean k
    lo = 0  # known dirty
    hi = 1
    while _triangle(d, dw, p, hi) is not None:
        lo = hi
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _triangle(d, dw, p, mid) is None:
            hi = mid
        else:
            lo = mid
    witness = _triangle(d, dw, p, hi - 1)
    return hi, witness


def pointed_slimness_at_most(dist: np.ndarray, g: Graph, w: int, k: int) -> bool:
    """Decision version: sigma_w <= k?"""
    d = dist.astype(np.int32, copy=False)
    p = projection_table(dist, g, w).copy()
    p[:, w] = -1
    p[w, :] = -1
    return _triangle(d, d[w], p, k) is None


def slimness_exact(g: Graph, dist: np.ndarray | None = None) -> ParamReport:
    d = all_pairs_distances(g) if dist is None else dist
    best = -1
    witness = (0, 0, 0, 0)
    for w in range(g.n):
        val, (x, y, z) = pointed_slimness(d, g, w)
        if val > best:
            best = val
            witness = (w, x, y, z)
    return ParamReport("sigma", HalfInt.whole(best), witness, "triangle-detect")


def check_sigma_witness(dist: np.ndarray, g: Graph, witness, value: HalfInt) -> bool:
    w, x, y, z = witness
    if value == 0:
        return pointed_slimness_at_most(dist, g, w, 0)
    d = dist
    if int(d[w, x]) + int(d[w, y]) != int(d[x, y]):
        return False
    p = projection_table(dist, g, w)
    k = value.doubled // 2
    return min(int(p[x, z]), int(p[y, z])) >= k and pointed_slimness_at_most(
        dist, g, w, k
    )
