"""Independent brute-force reference implementations.

Everything here is deliberately naive and shares no code with the fast
paths: distances come from plain per-source BFS, geodesics and BFS trees are
explicitly enumerated, and parameters are evaluated straight from their
definitions.  Only suitable for small graphs; enumerations carry caps and
raise TooLargeError beyond them.
"""

from __future__ import annotations

from collections import deque
from itertools import product as _product

from .cnf import CnfFormula
from .graph import Graph, TooLargeError


def _adj(g: Graph) -> list[list[int]]:
    return [[int(u) for u in g.neighbors(v)] for v in range(g.n)]


def _bfs_row(adj: list[list[int]], src: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[src] = 0
    q = deque([src])
    while q:
        v = q.popleft()
        for u in adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                q.append(u)
    return dist


def _all_dist(g: Graph) -> list[list[int]]:
    adj = _adj(g)
    return [_bfs_row(adj, s) for s in range(g.n)]


def enumerate_geodesics(g: Graph, u: int, v: int, cap: int = 10**5) -> list[tuple[int, ...]]:
    """All shortest (u,v)-paths, as vertex tuples from u to v."""
    adj = _adj(g)
    dv = _bfs_row(adj, v)
    # count first so the cap cannot be blown mid-enumeration
    counts = {v: 1}
    for x in sorted(range(g.n), key=lambda x: dv[x]):
        if x == v:
            continue
        counts[x] = sum(counts[y] for y in adj[x] if dv[y] == dv[x] - 1)
    if counts[u] > cap:
        raise TooLargeError(f"{counts[u]} geodesics exceed cap {cap}")
    paths = []

    def walk(x, acc):
        if x == v:
            paths.append(tuple(acc))
            return
        for y in adj[x]:
            if dv[y] == dv[x] - 1:
                acc.append(y)
                walk(y, acc)
                acc.pop()

    walk(u, [u])
    return paths


def enumerate_bfs_trees(g: Graph, root: int, cap: int = 10**6):
    """All shortest-path trees rooted at ``root`` as parent lists, in
    mixed-radix order (vertices ascending, parent choices ascending)."""
    adj = _adj(g)
    dist = _bfs_row(adj, root)
    choices = []
    for v in range(g.n):
        if v == root:
            choices.append([-1])
        else:
            choices.append([u for u in adj[v] if dist[u] == dist[v] - 1])
    total = 1
    for ch in choices:
        total *= len(ch)
    if total > cap:
        raise TooLargeError(f"{total} BFS trees exceed cap {cap}")
    return [list(combo) for combo in _product(*choices)]


def delta_brute(g: Graph) -> int:
    """Doubled four-point hyperbolicity by full quadruple scan."""
    d = _all_dist(g)
    n = g.n
    best = 0
    for u in range(n):
        for v in range(u + 1, n):
            for x in range(v + 1, n):
                for y in range(x + 1, n):
                    s = sorted(
                        (
                            d[u][v] + d[x][y],
                            d[u][x] + d[v][y],
                            d[u][y] + d[v][x],
                        )
                    )
                    best = max(best, s[2] - s[1])
    return best


def tau_x_brute(g: Graph, x: int) -> int:
    """Pointed thinness straight from the definition (quartic scan)."""
    d = _all_dist(g)
    n = g.n
    # layer-partitioned interval members for every endpoint
    members = {}
    for y in range(n):
        rows = [[] for _ in range(d[x][y] + 1)]
        for a in range(n):
            if d[x][a] + d[a][y] == d[x][y]:
                rows[d[x][a]].append(a)
        members[y] = rows
    best = 0
    for y in range(n):
        for z in range(n):
            rmax = (d[x][y] + d[x][z] - d[y][z]) // 2
            for ell in range(min(rmax, d[x][y], d[x][z]) + 1):
                for a in members[y][ell]:
                    for b in members[z][ell]:
                        if d[a][b] > best:
                            best = d[a][b]
    return best


def tau_brute(g: Graph) -> int:
    return max(tau_x_brute(g, x) for x in range(g.n))


def insize_brute(g: Graph, cap: int = 10**5) -> int:
    """Insize of the graph by enumerating geodesic pairs per triangle corner."""
    d = _all_dist(g)
    n = g.n
    best = 0
    for corner in range(n):
        geos = {t: enumerate_geodesics(g, corner, t, cap) for t in range(n)}
        for y in range(n):
            for z in range(y + 1, n):
                r = (d[corner][y] + d[corner][z] - d[y][z]) // 2
                ay = {p[r] for p in geos[y]}
                az = {p[r] for p in geos[z]}
                for a in ay:
                    for b in az:
                        if d[a][b] > best:
                            best = d[a][b]
    return best


def slimness_brute(g: Graph, cap: int = 10**5) -> int:
    """Slimness from the triangle definition with explicit geodesics."""
    d = _all_dist(g)
    n = g.n
    # worst[u][a][b]: max over (a,b)-geodesics P of min over p in P of d(u,p)
    worst = [[[0] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            paths = enumerate_geodesics(g, a, b, cap)
            for u in range(n):
                val = max(min(d[u][p] for p in path) for path in paths)
                worst[u][a][b] = worst[u][b][a] = val
    best = 0
    for u in range(n):
        for x in range(n):
            if x == u:
                continue
            for y in range(x + 1, n):
                if y == u or d[x][u] + d[u][y] != d[x][y]:
                    continue
                for z in range(n):
                    if z == u:
                        continue
                    val = min(worst[u][x][z], worst[u][y][z])
                    if val > best:
                        best = val
    return best


def rho_tree_brute(g: Graph, root: int, parent: list[int]) -> int:
    """Rooted insize of an explicit tree, straight from the definition."""
    d = _all_dist(g)
    n = g.n

    def path(v):
        out = [v]
        while parent[out[-1]] >= 0:
            out.append(parent[out[-1]])
        return out[::-1]

    paths = [path(v) for v in range(n)]
    best = 0
    for x in range(n):
        for y in range(x, n):
            r = (d[root][x] + d[root][y] - d[x][y]) // 2
            val = d[paths[x][r]][paths[y][r]]
            if val > best:
                best = val
    return best


def minsize_brute(g: Graph, cap: int = 10**6) -> int:
    best = None
    for root in range(g.n):
        for parent in enumerate_bfs_trees(g, root, cap):
            val = rho_tree_brute(g, root, parent)
            if best is None or val < best:
                best = val
    return best


def maxsize_brute(g: Graph, cap: int = 10**6) -> int:
    best = 0
    for root in range(g.n):
        for parent in enumerate_bfs_trees(g, root, cap):
            best = max(best, rho_tree_brute(g, root, parent))
    return best


def sat_brute(phi: CnfFormula) -> bool:
    """Truth-table satisfiability, independent of the package's fast layers."""
    n = phi.num_vars
    if n > 24:
        raise TooLargeError("sat_brute handles at most 24 variables")
    for assign in range(1 << n):
        truth = [(assign >> i) & 1 == 1 for i in range(n)]
        ok = True
        for c in phi.clauses:
            if not any(truth[abs(l) - 1] == (l > 0) for l in c):
                ok = False
                break
        if ok:
            return True
    return False
