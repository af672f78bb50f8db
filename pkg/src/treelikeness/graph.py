"""Core graph type and metric primitives.

Graphs are unweighted, undirected, connected and stored in CSR form (an
offsets array plus a flat array of sorted neighbor lists).  All-pairs
distances are kept as a dense uint16 matrix; inputs whose diameter would not
fit are rejected rather than silently truncated.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
from scipy.sparse import csgraph

from .halfint import HalfInt

MAX_DISTANCE = 2**16 - 1


class GraphError(ValueError):
    """Base class for graph construction / validation failures."""


class EmptyGraphError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DisconnectedError(GraphError):
    pass


class DiameterOverflowError(GraphError):
    pass


class NotATreeError(GraphError):
    pass


class NotShortestPathTreeError(GraphError):
    pass


class TreeMismatchError(GraphError):
    """Tree and distance matrix disagree (different graph or different root)."""


class TooLargeError(GraphError):
    """An enumeration or computation exceeds its configured cap."""


class Graph:
    """Immutable connected simple graph on vertices 0..n-1 in CSR form."""

    __slots__ = ("n", "m", "indptr", "indices", "original_ids", "_csr")

    def __init__(self, n: int, edges, original_ids=None):
        if n <= 0:
            raise EmptyGraphError("graph must have at least one vertex")
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            seen.add((u, v) if u < v else (v, u))
        adj = [[] for _ in range(n)]
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)
        indptr = np.zeros(n + 1, dtype=np.int64)
        for v in range(n):
            adj[v].sort()
            indptr[v + 1] = indptr[v] + len(adj[v])
        indices = np.empty(indptr[-1], dtype=np.int32)
        for v in range(n):
            indices[indptr[v]:indptr[v + 1]] = adj[v]
        self.n = n
        self.m = len(seen)
        self.indptr = indptr
        self.indices = indices
        self.original_ids = original_ids
        self._csr = None
        self._check_connected()

    def _check_connected(self):
        seen = np.zeros(self.n, dtype=bool)
        seen[0] = True
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self.indices[self.indptr[v]:self.indptr[v + 1]]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(int(u))
        if not seen.all():
            raise DisconnectedError("graph is not connected")

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def edges(self):
        for v in range(self.n):
            for u in self.neighbors(v):
                if v < u:
                    yield (v, int(u))

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=bool)
        rows = np.repeat(np.arange(self.n), np.diff(self.indptr))
        a[rows, self.indices] = True
        return a

    def csr(self) -> sp.csr_matrix:
        if self._csr is None:
            data = np.ones(len(self.indices), dtype=np.int8)
            self._csr = sp.csr_matrix(
                (data, self.indices, self.indptr), shape=(self.n, self.n)
            )
        return self._csr

    def to_edge_text(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges())

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def parse_graph(text: str) -> Graph:
    """Parse a whitespace edge list ("u v" per line, '#' comments).

    Vertex ids may be arbitrary non-negative integers; they are remapped to a
    contiguous 0-based range (sorted by original id).  The mapping is kept on
    the returned graph as ``original_ids``.
    """
    edges = []
    ids = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex id in {raw!r}")
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex id in {raw!r}")
        edges.append((u, v))
        ids.add(u)
        ids.add(v)
    if not edges:
        raise EmptyGraphError("no edges found in input")
    order = sorted(ids)
    remap = {orig: i for i, orig in enumerate(order)}
    mapped = [(remap[u], remap[v]) for u, v in edges]
    return Graph(len(order), mapped, original_ids=tuple(order))


def bfs_distances(g: Graph, src: int) -> np.ndarray:
    """Single-source BFS distance row (int32)."""
    dist = np.full(g.n, -1, dtype=np.int32)
    dist[src] = 0
    q = deque([src])
    indptr, indices = g.indptr, g.indices
    while q:
        v = q.popleft()
        d1 = dist[v] + 1
        for u in indices[indptr[v]:indptr[v + 1]]:
            if dist[u] < 0:
                dist[u] = d1
                q.append(int(u))
    return dist


@dataclass
class BfsTree:
    """A BFS (= shortest-path) tree rooted at ``root``.

    ``parent[root]`` is -1; ``depth[v]`` equals the graph distance from the
    root.  The ancestor table M satisfies M[v, r] = ancestor of v at depth r
    for r <= depth[v] and M[v, r] = v beyond its own depth.
    """

    root: int
    parent: np.ndarray
    depth: np.ndarray
    _table: np.ndarray | None = field(default=None, repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.parent)

    @property
    def height(self) -> int:
        return int(self.depth.max())

    def ancestor_table(self) -> np.ndarray:
        if self._table is None:
            self._table = ancestor_table(self.parent, self.depth)
        return self._table

    def path_vertex(self, v: int, r: int) -> int:
        """Vertex on the tree path from root to v at depth r (clamped to v)."""
        d = int(self.depth[v])
        if r >= d:
            return int(v)
        x = int(v)
        for _ in range(d - r):
            x = int(self.parent[x])
        return x


def ancestor_table(parent: np.ndarray, depth: np.ndarray) -> np.ndarray:
    n = len(parent)
    h = int(depth.max())
    table = np.empty((n, h + 1), dtype=np.int32)
    order = np.argsort(depth, kind="stable")
    for v in order:
        v = int(v)
        p = parent[v]
        if p < 0:
            table[v, :] = v
        else:
            table[v, :] = table[p]
            table[v, depth[v]:] = v
    return table


def bfs(g: Graph, root: int) -> BfsTree:
    """Deterministic BFS tree: each vertex takes its smallest-id neighbor one
    layer closer to the root as parent."""
    if not (0 <= root < g.n):
        raise GraphError(f"root {root} out of range")
    dist = bfs_distances(g, root)
    parent = np.full(g.n, -1, dtype=np.int32)
    indptr, indices = g.indptr, g.indices
    for v in range(g.n):
        if v == root:
            continue
        nb = indices[indptr[v]:indptr[v + 1]]
        up = nb[dist[nb] == dist[v] - 1]
        parent[v] = up[0]  # neighbor lists are sorted ascending
    return BfsTree(root=root, parent=parent, depth=dist)


def bfs_tree_from_parents(g: Graph, root: int, parent) -> BfsTree:
    """Validate a caller-supplied parent array as a shortest-path tree.

    Raises NotATreeError when the parent pointers are not a spanning tree of
    graph edges, and NotShortestPathTreeError when tree depths disagree with
    graph distances from the root.
    """
    parent = np.asarray(parent, dtype=np.int32)
    if parent.shape != (g.n,):
        raise NotATreeError(f"parent array must have length {g.n}")
    if parent[root] != -1:
        raise NotATreeError("root must have parent -1")
    adj = [set(map(int, g.neighbors(v))) for v in range(g.n)]
    depth = np.full(g.n, -1, dtype=np.int32)
    depth[root] = 0
    for v in range(g.n):
        if depth[v] >= 0:
            continue
        chain = []
        x = v
        while depth[x] < 0:
            if x in chain:
                raise NotATreeError("parent pointers contain a cycle")
            chain.append(x)
            p = int(parent[x])
            if p < 0 or p >= g.n:
                raise NotATreeError(f"vertex {x} has invalid parent {p}")
            if p not in adj[x]:
                raise NotATreeError(f"parent edge ({x},{p}) is not a graph edge")
            x = p
        base = int(depth[x])
        for i, y in enumerate(reversed(chain), 1):
            depth[y] = base + i
    dist = bfs_distances(g, root)
    if not np.array_equal(depth, dist):
        raise NotShortestPathTreeError("tree depths do not match BFS distances")
    return BfsTree(root=root, parent=parent, depth=dist)


def all_pairs_distances(g: Graph, chunk: int = 512) -> np.ndarray:
    """Dense all-pairs distance matrix, dtype uint16."""
    d = np.empty((g.n, g.n), dtype=np.uint16)
    mat = g.csr()
    for start in range(0, g.n, chunk):
        idx = np.arange(start, min(start + chunk, g.n))
        block = csgraph.dijkstra(mat, indices=idx, unweighted=True)
        if np.isinf(block).any():
            raise DisconnectedError("graph is not connected")
        if block.max() > MAX_DISTANCE:
            raise DiameterOverflowError("diameter does not fit in uint16")
        d[idx] = block.astype(np.uint16)
    return d


def gromov_product(dist: np.ndarray, y: int, z: int, w: int) -> HalfInt:
    """(y|z)_w = (d(y,w) + d(z,w) - d(y,z)) / 2, exactly."""
    return HalfInt(int(dist[y, w]) + int(dist[z, w]) - int(dist[y, z]))


def in_interval(dist: np.ndarray, u: int, x: int, v: int) -> bool:
    """True iff u lies on some shortest (x,v)-path."""
    return int(dist[x, u]) + int(dist[u, v]) == int(dist[x, v])
