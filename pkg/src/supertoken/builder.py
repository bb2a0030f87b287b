"""Materialise supertoken graphs and generate neighbours on the fly.

Two configurations are adjacent when one token slides along a base edge to a
vertex that still has room for it.  Vertices are numbered by lexicographic
rank of their configuration tuple; rows of the adjacency are sorted.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import _pykernel, kernels
from .configs import Configuration, format_config, validate
from .counting import order_of
from .graph import BaseGraph, GraphError
from .tokens import TokenMode, TokenSpec

DEFAULT_BUILD_CAP = 1_000_000


class TooLargeError(ValueError):
    def __init__(self, order: int, cap: int):
        super().__init__(f"supertoken graph has {order} vertices, above the build cap {cap}")
        self.order = order
        self.cap = cap


@dataclass(eq=False)
class SupertokenGraph:
    base: BaseGraph
    spec: TokenSpec
    vertices: list
    indptr: np.ndarray = field(repr=False)
    indices: np.ndarray = field(repr=False)
    kernel: str = "python"

    @property
    def order(self) -> int:
        return len(self.vertices)

    n = order

    @property
    def size(self) -> int:
        return int(len(self.indices)) // 2

    @cached_property
    def adj(self) -> list[list[int]]:
        ptr = self.indptr.tolist()
        ind = self.indices.tolist()
        return [ind[ptr[i]:ptr[i + 1]] for i in range(self.order)]

    @cached_property
    def _index(self) -> dict:
        return {c: i for i, c in enumerate(self.vertices)}

    def index_of(self, c) -> int:
        entries = c.entries if isinstance(c, Configuration) else tuple(c)
        return self._index[entries]

    def configuration(self, i: int) -> Configuration:
        return Configuration(self.vertices[i], self.spec.mode)

    def label(self, i: int) -> str:
        return format_config(self.vertices[i], self.spec.mode)

    def degree(self, i: int) -> int:
        return int(self.indptr[i + 1] - self.indptr[i])

    def degrees(self) -> list[int]:
        return np.diff(self.indptr).tolist()

    def edges(self):
        """Index pairs ``(i, j)`` with ``i < j``, in row order."""
        for i, row in enumerate(self.adj):
            for j in row:
                if i < j:
                    yield i, j

    def edge_pairs(self) -> set:
        """Edges as pairs of configuration tuples, smaller tuple first."""
        vs = self.vertices
        return {(vs[i], vs[j]) for i, j in self.edges()}

    def with_edge_removed(self, i: int, j: int) -> "SupertokenGraph":
        """Copy of this graph lacking the edge ``{i, j}``; used to test that checks notice."""
        rows = [list(r) for r in self.adj]
        if j not in rows[i]:
            raise GraphError(f"no edge between {i} and {j}")
        rows[i].remove(j)
        rows[j].remove(i)
        indptr = np.zeros(self.order + 1, dtype=np.int64)
        np.cumsum([len(r) for r in rows], out=indptr[1:])
        indices = np.array([x for r in rows for x in r], dtype=np.int64)
        return SupertokenGraph(self.base, self.spec, self.vertices, indptr, indices, self.kernel)

    def __str__(self) -> str:
        return f"F({self.base}; {self.spec})"


def _base_csr(g: BaseGraph):
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    np.cumsum([len(a) for a in g.adj], out=indptr[1:])
    indices = np.array([v for a in g.adj for v in a], dtype=np.int64)
    return indptr, indices


def build(g: BaseGraph, spec: TokenSpec, cap: int = DEFAULT_BUILD_CAP,
          kernel: str | None = None) -> SupertokenGraph:
    expected = order_of(g.n, spec)
    if expected > cap:
        raise TooLargeError(expected, cap)
    kernel = kernels.resolve(kernel)
    k, s, dist = spec.k, spec.s, spec.distinguishable
    if kernel == "compiled" and k <= 64 and g.n**k < 2**62:
        ck = kernels._ckernel
        rows = ck.enumerate_configs(g.n, k, s, dist)
        bptr, bind = _base_csr(g)
        indptr, indices = ck.build_adjacency(rows, bptr, bind, g.n, s, dist)
        vertices = [tuple(r) for r in rows.tolist()]
        return SupertokenGraph(g, spec, vertices, indptr, indices, "compiled")
    vertices = _pykernel.enumerate_configs(g.n, k, s, dist)
    indptr, indices = _pykernel.build_adjacency(vertices, g.adj, s, dist)
    return SupertokenGraph(g, spec, vertices, np.asarray(indptr, dtype=np.int64),
                           np.asarray(indices, dtype=np.int64), "python")


def neighbors(g: BaseGraph, spec: TokenSpec, c) -> list[Configuration]:
    """Configurations one token move away from ``c``, sorted; no size cap."""
    entries = validate(c, g.n, spec)
    found = _pykernel.moves(entries, g.adj, spec.s, spec.distinguishable)
    return [Configuration(e, spec.mode) for e in sorted(found)]


def move_between(a, b, mode: TokenMode):
    """``(from_vertex, to_vertex, position)`` of the single token move turning a into b, else None.

    ``position`` is the moving token's index for distinct tokens and None for
    equal tokens.
    """
    a = a.entries if isinstance(a, Configuration) else tuple(a)
    b = b.entries if isinstance(b, Configuration) else tuple(b)
    if len(a) != len(b):
        return None
    if mode is TokenMode.DIST:
        diff = [q for q in range(len(a)) if a[q] != b[q]]
        if len(diff) != 1:
            return None
        q = diff[0]
        return a[q], b[q], q
    ca, cb = Counter(a), Counter(b)
    more_a = list((ca - cb).elements())
    more_b = list((cb - ca).elements())
    if len(more_a) != 1 or len(more_b) != 1:
        return None
    return more_a[0], more_b[0], None


def edges_over_base_edge(st: SupertokenGraph, u: int, v: int) -> list[tuple[Configuration, Configuration]]:
    """Supertoken edges whose move crosses base edge ``uv``, as (token-at-u, token-at-v) pairs."""
    if not st.base.has_edge(u, v):
        raise GraphError(f"{{{u}, {v}}} is not an edge of {st.base}")
    mode = st.spec.mode
    out = []
    for i, j in st.edges():
        a, b = st.vertices[i], st.vertices[j]
        x, y, _ = move_between(a, b, mode)
        if (x, y) == (u, v):
            out.append((Configuration(a, mode), Configuration(b, mode)))
        elif (x, y) == (v, u):
            out.append((Configuration(b, mode), Configuration(a, mode)))
    return out


def edge_class(a_u, a_v, u: int, v: int, mode: TokenMode) -> tuple[int, int]:
    """How many other tokens sit on ``u`` and on ``v`` while the mover is at ``u``."""
    x, y, q = move_between(a_u, a_v, mode)
    if (x, y) != (u, v):
        raise ValueError("pair is not a move from u to v")
    entries = a_u.entries if isinstance(a_u, Configuration) else tuple(a_u)
    return entries.count(u) - 1, entries.count(v)


def implicit_component(g: BaseGraph, spec: TokenSpec, start, limit: int) -> set | None:
    """Configurations reachable from ``start`` by BFS over :func:`neighbors`.

    Returns None once more than ``limit`` configurations have been seen.
    """
    entries = validate(start, g.n, spec)
    seen = {entries}
    queue = deque([entries])
    s, dist = spec.s, spec.distinguishable
    while queue:
        c = queue.popleft()
        for d in _pykernel.moves(c, g.adj, s, dist):
            if d not in seen:
                seen.add(d)
                if len(seen) > limit:
                    return None
                queue.append(d)
    return seen
