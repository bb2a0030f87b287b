"""Simple undirected base graphs, standard families and elementary algorithms.

Vertices are always labelled ``0..n-1``.  Figures that number path and cycle
vertices ``1..n`` map to this module by subtracting one; the star keeps the
``0`` centre / ``1..n`` leaves labelling unchanged.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for invalid graph construction requests."""


@dataclass(frozen=True)
class BaseGraph:
    n: int
    edges: frozenset = field(repr=False)
    adj: tuple = field(repr=False, compare=False)
    name: str = field(default="", compare=False)

    @property
    def order(self) -> int:
        return self.n

    @property
    def size(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __str__(self) -> str:
        return self.name or f"graph(n={self.n}, m={self.size})"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]], name: str = "") -> BaseGraph:
    """Build a graph on ``n`` vertices; duplicates and reversed pairs collapse."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    edges = set()
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        edges.add((u, v) if u < v else (v, u))
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    adj = tuple(tuple(sorted(a)) for a in nbrs)
    return BaseGraph(n, frozenset(edges), adj, name)


def make_path(n: int) -> BaseGraph:
    if n < 1:
        raise GraphError("a path needs at least one vertex")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)], f"path:{n}")


def make_cycle(n: int) -> BaseGraph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)], f"cycle:{n}")


def make_star(n: int) -> BaseGraph:
    """Star with centre 0 and ``n`` leaves, so ``n + 1`` vertices."""
    if n < 1:
        raise GraphError("a star needs at least one leaf")
    return from_edge_list(n + 1, [(0, i) for i in range(1, n + 1)], f"star:{n}")


def make_complete(n: int) -> BaseGraph:
    if n < 1:
        raise GraphError("a complete graph needs at least one vertex")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return from_edge_list(n, pairs, f"complete:{n}")


def relabel(g: BaseGraph, perm: Sequence[int]) -> BaseGraph:
    """Return the copy of ``g`` with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabelling must be a permutation of the vertices")
    return from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges], g.name)


# The algorithms below only need ``.adj`` (a sequence of neighbour sequences)
# so they run unchanged on base graphs and on built supertoken graphs.

def _bfs_order(adj, source: int, seen: list[bool]) -> list[int]:
    seen[source] = True
    out = [source]
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                out.append(y)
                queue.append(y)
    return out


def connected_components(g) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest member."""
    adj = g.adj
    seen = [False] * len(adj)
    comps = []
    for v in range(len(adj)):
        if not seen[v]:
            comps.append(sorted(_bfs_order(adj, v, seen)))
    return comps


def is_connected(g) -> bool:
    adj = g.adj
    if len(adj) <= 1:
        return True
    seen = [False] * len(adj)
    return len(_bfs_order(adj, 0, seen)) == len(adj)


@dataclass(frozen=True)
class BipartiteResult:
    bipartite: bool
    coloring: tuple | None = None
    odd_cycle: tuple | None = None

    def __bool__(self) -> bool:
        return self.bipartite


def is_bipartite(g) -> BipartiteResult:
    """BFS 2-colouring.

    On success ``coloring[v]`` is 0 or 1 for every vertex.  On failure
    ``odd_cycle`` is a closed walk ``(x0, x1, ..., x_{L-1})`` of odd length L
    where consecutive vertices (and the last and first) are adjacent.
    """
    adj = g.adj
    n = len(adj)
    color = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    for root in range(n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    queue.append(y)
                elif color[y] == color[x]:
                    return BipartiteResult(False, odd_cycle=_odd_cycle(x, y, parent, depth))
    return BipartiteResult(True, coloring=tuple(color))


def _odd_cycle(x: int, y: int, parent: list[int], depth: list[int]) -> tuple:
    # x and y are adjacent, same colour, same BFS tree; join their tree paths
    left, right = [x], [y]
    a, b = x, y
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    right.pop()  # common ancestor already ends ``left``
    return tuple(left + right[::-1])


def check_coloring(g, coloring: Sequence[int]) -> bool:
    adj = g.adj
    return all(coloring[x] != coloring[y] for x in range(len(adj)) for y in adj[x])


def check_odd_closed_walk(g, walk: Sequence[int]) -> bool:
    if len(walk) % 2 == 0 or len(walk) < 3:
        return False
    adj = g.adj
    return all(walk[(i + 1) % len(walk)] in adj[walk[i]] for i in range(len(walk)))


def distance(g, u: int, v: int) -> int | None:
    """Shortest-path length, or ``None`` when ``v`` is unreachable from ``u``."""
    adj = g.adj
    n = len(adj)
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"vertex out of range 0..{n - 1}")
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == v:
                    return dist[y]
                queue.append(y)
    return None


def disjoint_union(*graphs: BaseGraph) -> BaseGraph:
    pairs = []
    offset = 0
    for h in graphs:
        pairs.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return from_edge_list(offset, pairs, " + ".join(str(h) for h in graphs))


def complete_bipartite(a: int, b: int) -> BaseGraph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)], f"K{a},{b}")


# Connected graph with maximum degree 5 used to illustrate connectivity:
# centre 0 joined to 1..5, plus the pendant paths 2-6-7 and 3-8-9.
EXAMPLE_DELTA5_EDGES = ((0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (2, 6), (6, 7), (3, 8), (8, 9))


def example_delta5_graph() -> BaseGraph:
    return from_edge_list(10, EXAMPLE_DELTA5_EDGES, "example-delta5")
