"""Simple undirected graphs on vertices ``0..n-1`` and the bicyclic base taxonomy.

Graphs are immutable values.  Besides the edge set a graph carries per-vertex
neighbour sets and neighbour bitmasks; the bitmasks are what the hot loops in
the canonical labeller and the census touch.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Union


class GraphError(ValueError):
    """Raised for malformed graphs or violated preconditions."""


class NoPathError(GraphError):
    """Raised when two vertices lie in different components."""


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph with vertex set ``range(n)``."""

    __slots__ = ("n", "edges", "adj", "masks", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise GraphError(f"vertex count must be >= 1, got {n}")
        es = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            e = _norm(u, v)
            if e in es:
                raise GraphError(f"duplicate edge {e}")
            es.add(e)
        adj = [set() for _ in range(n)]
        masks = [0] * n
        for u, v in es:
            adj[u].add(v)
            adj[v].add(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.edges = frozenset(es)
        self.adj = tuple(frozenset(s) for s in adj)
        self.masks = tuple(masks)
        self._hash = None

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        masks = list(masks)
        n = len(masks)
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n)
                       if masks[u] >> v & 1))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def with_edges(self, remove=(), add=()) -> "Graph":
        """Return a copy with ``remove`` deleted and ``add`` inserted."""
        es = set(self.edges)
        for u, v in remove:
            e = _norm(u, v)
            if e not in es:
                raise GraphError(f"edge {e} not present")
            es.remove(e)
        for u, v in add:
            e = _norm(u, v)
            if e in es:
                raise GraphError(f"edge {e} already present")
            es.add(e)
        return Graph(self.n, es)

    def relabel(self, perm) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.edges))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


# --- basic operations -------------------------------------------------------

def complement(g: Graph) -> Graph:
    return Graph(g.n, ((u, v) for u, v in combinations(range(g.n), 2) if v not in g.adj[u]))


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    reach = frontier = 1
    masks = g.masks
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~reach
        reach |= nxt
    return reach == full


def is_bicyclic(g: Graph) -> bool:
    return g.m == g.n + 1 and is_connected(g)


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from ``source``; ``-1`` marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in sorted(g.adj[u]):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> int:
    d = bfs_distances(g, u)[v]
    if d < 0:
        raise NoPathError(f"{v} unreachable from {u}")
    return d


def shortest_path(g: Graph, u: int, v: int) -> list[int]:
    """Breadth-first shortest path from ``u`` to ``v``.

    Neighbours are expanded in increasing index order, so the returned path is
    deterministic: among all shortest paths it is the one whose BFS parent
    pointers were set first.
    """
    if u == v:
        return [u]
    parent = [-1] * g.n
    parent[u] = u
    queue = deque([u])
    while queue:
        a = queue.popleft()
        for w in sorted(g.adj[a]):
            if parent[w] < 0:
                parent[w] = a
                if w == v:
                    path = [v]
                    while path[-1] != u:
                        path.append(parent[path[-1]])
                    return path[::-1]
                queue.append(w)
    raise NoPathError(f"{v} unreachable from {u}")


# --- base taxonomy ----------------------------------------------------------

@dataclass(frozen=True)
class Theta:
    """Two hubs joined by three internally disjoint paths, lengths a <= b <= c."""
    a: int
    b: int
    c: int

    def __post_init__(self):
        if not (1 <= self.a <= self.b <= self.c):
            raise GraphError(f"theta lengths must satisfy 1 <= a <= b <= c: {self}")
        if self.b == 1:
            raise GraphError("theta graph with two length-1 paths is a multigraph")

    @property
    def order(self) -> int:
        return self.a + self.b + self.c - 1

    def __str__(self):
        return f"theta({self.a},{self.b},{self.c})"


@dataclass(frozen=True)
class Infinity:
    """Two cycles of lengths a <= b sharing exactly one vertex."""
    a: int
    b: int

    def __post_init__(self):
        if not (3 <= self.a <= self.b):
            raise GraphError(f"infinity cycle lengths must satisfy 3 <= a <= b: {self}")

    @property
    def order(self) -> int:
        return self.a + self.b - 1

    def __str__(self):
        return f"infinity({self.a},{self.b})"


@dataclass(frozen=True)
class BGraph:
    """Two disjoint cycles of lengths a <= b joined by a path of length ell."""
    a: int
    b: int
    ell: int

    def __post_init__(self):
        if not (3 <= self.a <= self.b) or self.ell < 1:
            raise GraphError(f"b-graph needs 3 <= a <= b and ell >= 1: {self}")

    @property
    def order(self) -> int:
        return self.a + self.b + self.ell - 1

    def __str__(self):
        return f"bgraph({self.a},{self.b},{self.ell})"


BaseKind = Union[Theta, Infinity, BGraph]


def two_core(g: Graph) -> set[int]:
    """Vertices left after repeatedly deleting vertices of degree <= 1."""
    deg = g.degrees()
    alive = set(range(g.n))
    stack = [v for v in range(g.n) if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.remove(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    return alive


def classify_base(g: Graph) -> BaseKind:
    """Identify the theta / infinity / b-graph base of a bicyclic graph."""
    if not is_bicyclic(g):
        raise GraphError("classify_base needs a connected graph with |E| = |V| + 1")
    core = two_core(g)
    cadj = {v: [w for w in sorted(g.adj[v]) if w in core] for v in core}
    branch = sorted(v for v in core if len(cadj[v]) >= 3)

    # walk every branch-to-branch route through degree-2 vertices
    routes = []
    for h in branch:
        for first in cadj[h]:
            prev, cur, length = h, first, 1
            while len(cadj[cur]) == 2:
                nxt = cadj[cur][0] if cadj[cur][1] == prev else cadj[cur][1]
                prev, cur, length = cur, nxt, length + 1
            routes.append((h, cur, length))

    if len(branch) == 1:
        # two loops at the single degree-4 vertex, each seen from both ends
        loops = sorted(r[2] for r in routes)
        return Infinity(loops[0], loops[2])
    if len(branch) != 2:
        raise GraphError(f"unexpected 2-core with branch vertices {branch}")
    h0, h1 = branch
    from_h0 = [r for r in routes if r[0] == h0]
    cross = sorted(r[2] for r in from_h0 if r[1] == h1)
    if len(cross) == 3:
        return Theta(*cross)
    loop0 = [r[2] for r in from_h0 if r[1] == h0]
    loop1 = [r[2] for r in routes if r[0] == h1 and r[1] == h1]
    a, b = sorted((loop0[0], loop1[0]))
    return BGraph(a, b, cross[0])


# --- constructors -----------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    return Graph(n, ((0, i) for i in range(1, n)))


def star_plus_2e(n: int, shared: bool = False) -> Graph:
    """K_{1,n-1} with two leaf pairs joined: {1,2} and {3,4}.

    With ``shared=True`` the pairs share a leaf ({1,2} and {2,3}); that graph
    also has a dominating vertex, so its complement is disconnected too.
    """
    if n < 5:
        raise GraphError("K_{1,n-1}+2e needs n >= 5")
    extra = [(1, 2), (2, 3)] if shared else [(1, 2), (3, 4)]
    return Graph(n, [(0, i) for i in range(1, n)] + extra)


def _attach_path(edges, start, end, length, nxt):
    """Append a path of ``length`` edges from ``start`` to ``end`` using fresh
    vertices numbered from ``nxt``; returns the next free vertex."""
    prev = start
    for _ in range(length - 1):
        edges.append((prev, nxt))
        prev, nxt = nxt, nxt + 1
    edges.append((prev, end))
    return nxt


def theta_graph(a: int, b: int, c: int) -> Graph:
    """Hubs 0 and 1 joined by paths of lengths a, b, c."""
    kind = Theta(*sorted((a, b, c)))
    edges: list = []
    nxt = 2
    for length in (kind.a, kind.b, kind.c):
        nxt = _attach_path(edges, 0, 1, length, nxt)
    return Graph(kind.order, edges)


def infinity_graph(a: int, b: int) -> Graph:
    """Cycles of lengths a and b sharing vertex 0."""
    kind = Infinity(*sorted((a, b)))
    edges: list = []
    nxt = 1
    for length in (kind.a, kind.b):
        first = nxt
        nxt = _attach_path(edges, first, 0, length - 1, nxt + 1)
        edges.append((0, first))
    return Graph(kind.order, edges)


def bgraph(a: int, b: int, ell: int) -> Graph:
    """Cycle of length a through vertex 0, cycle of length b through vertex 1,
    and a path of length ell from 0 to 1."""
    lo, hi = sorted((a, b))
    kind = BGraph(lo, hi, ell)
    edges: list = []
    nxt = _attach_path(edges, 0, 1, ell, 2)
    for hub, length in ((0, lo), (1, hi)):
        first = nxt
        nxt = _attach_path(edges, first, hub, length - 1, nxt + 1)
        edges.append((hub, first))
    return Graph(kind.order, edges)


def attach_pendants(g: Graph, counts: dict[int, int]) -> Graph:
    """Hang ``counts[v]`` new pendant vertices on each listed vertex ``v``."""
    edges = list(g.edges)
    nxt = g.n
    for v, k in sorted(counts.items()):
        for _ in range(k):
            edges.append((v, nxt))
            nxt += 1
    return Graph(nxt, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges])
