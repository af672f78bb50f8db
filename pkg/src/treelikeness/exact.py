"""Exact (polynomial but superquadratic) parameter computations.

* four-point hyperbolicity delta, O(n^4) vectorized over vertex pairs,
* pointed hyperbolicity delta_w, O(n^3),
* interval thinness kappa (max spread of a distance layer of an interval).

Values are exact half-integers; witnesses are the lexicographically first
maximizers in the documented scan order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from .halfint import HalfInt


@dataclass(frozen=True)
class ParamReport:
    parameter: str
    value: HalfInt
    witness: tuple
    algorithm: str


def _int32(dist: np.ndarray) -> np.ndarray:
    return dist.astype(np.int32, copy=False)


def hyperbolicity_exact(dist: np.ndarray) -> ParamReport:
    """Four-point condition delta: max over quadruples of
    (largest pairing sum - second largest) / 2."""
    d = _int32(np.asarray(dist))
    n = d.shape[0]
    best = -1
    witness = (0, 0, 0, 0)
    for u in range(n):
        du = d[u]
        for v in range(u + 1, n):
            dv = d[v]
            s1 = int(d[u, v]) + d
            s2 = du[:, None] + dv[None, :]
            s3 = du[None, :] + dv[:, None]
            mx = np.maximum(np.maximum(s1, s2), s3)
            mn = np.minimum(np.minimum(s1, s2), s3)
            diff = 2 * mx - (s1 + s2 + s3) + mn  # largest - median
            local = int(diff.max())
            if local > best:
                best = local
                x, y = np.unravel_index(int(diff.argmax()), diff.shape)
                witness = (u, v, int(x), int(y))
    return ParamReport("delta", HalfInt(best), witness, "four-point-scan")


def check_delta_witness(dist: np.ndarray, witness, value: HalfInt) -> bool:
    u, v, x, y = witness
    s = sorted(
        (
            int(dist[u, v]) + int(dist[x, y]),
            int(dist[u, x]) + int(dist[v, y]),
            int(dist[u, y]) + int(dist[v, x]),
        )
    )
    return s[2] - s[1] == value.doubled


def pointed_hyperbolicity(dist: np.ndarray, w: int) -> ParamReport:
    """delta_w = max over x,y,z of min((x|z)_w, (y|z)_w) - (x|y)_w."""
    d = _int32(np.asarray(dist))
    n = d.shape[0]
    dw = d[w]
    prod = dw[:, None] + dw[None, :] - d  # doubled Gromov products
    best = 0
    witness = (w, w, w)
    for z in range(n):
        col = prod[:, z]
        expr = np.minimum(col[:, None], col[None, :]) - prod
        local = int(expr.max())
        if local > best:
            best = local
            x, y = np.unravel_index(int(expr.argmax()), expr.shape)
            witness = (int(x), int(y), z)
    return ParamReport("delta_w", HalfInt(best), witness, "pointed-scan")


def check_pointed_witness(dist: np.ndarray, w: int, witness, value: HalfInt) -> bool:
    x, y, z = witness
    d = dist

    def p2(a, b):
        return int(d[a, w]) + int(d[b, w]) - int(d[a, b])

    got = min(p2(x, z), p2(y, z)) - p2(x, y)
    return max(got, 0) == value.doubled


def interval_thinness(dist: np.ndarray) -> ParamReport:
    """kappa: max distance between two vertices in the same distance layer of
    some interval I(u, v)."""
    d = _int32(np.asarray(dist))
    n = d.shape[0]
    best = 0
    witness = (0, 0, 0, 0)
    for u in range(n):
        du = d[u]
        onpath = du[:, None] + d == du[None, :]  # onpath[a, v]: a in I(u, v)
        for v in range(n):
            members = np.flatnonzero(onpath[:, v])
            if len(members) < 2:
                continue
            layers = du[members]
            sub = d[np.ix_(members, members)].copy()
            sub[layers[:, None] != layers[None, :]] = 0
            local = int(sub.max())
            if local > best:
                best = local
                i, j = np.unravel_index(int(sub.argmax()), sub.shape)
                witness = (u, v, int(members[i]), int(members[j]))
    return ParamReport("kappa", HalfInt.whole(best), witness, "layer-scan")


def check_kappa_witness(dist: np.ndarray, witness, value: HalfInt) -> bool:
    u, v, a, b = witness
    d = dist
    ok_a = int(d[u, a]) + int(d[a, v]) == int(d[u, v])
    ok_b = int(d[u, b]) + int(d[b, v]) == int(d[u, v])
    same_layer = int(d[u, a]) == int(d[u, b])
    return ok_a and ok_b and same_layer and HalfInt.whole(int(d[a, b])) == value


WITNESS_CHECKS: dict[str, Any] = {
    "delta": check_delta_witness,
    "kappa": check_kappa_witness,
}
