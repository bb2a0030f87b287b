"""Structure of built graphs and explicit isomorphism witnesses."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from .builder import TooLargeError, build
from .graph import BaseGraph, connected_components, from_edge_list, make_path
from .tokens import TokenMode, TokenSpec

SMALL_GRAPH_CAP = 64


def _order(g) -> int:
    return len(g.adj)


def _size(g) -> int:
    return g.size


def cycle_space_dimension(g) -> int:
    """``|E| - |V| + #components``; positive exactly when ``g`` has a cycle."""
    return _size(g) - _order(g) + len(connected_components(g))


@dataclass(frozen=True)
class ComponentInfo:
    order: int
    size: int
    kind: str  # "isolated", "path", "cycle" or "other"

    @property
    def length(self) -> int:
        # paths and cycles are named by their vertex count, as in P_n and C_n
        return self.order

    def __str__(self) -> str:
        if self.kind == "isolated":
            return "IsolatedVertex"
        if self.kind in ("path", "cycle"):
            return f"{self.kind.capitalize()}({self.order})"
        return f"Other({self.order},{self.size})"


@dataclass
class ComponentSummary:
    components: list = field(default_factory=list)

    @property
    def order(self) -> int:
        return sum(c.order for c in self.components)

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)

    def counts(self) -> Counter:
        return Counter(str(c) for c in self.components)

    def is_uniform(self, label: str, copies: int) -> bool:
        return len(self.components) == copies and all(str(c) == label for c in self.components)

    def to_json(self) -> list:
        return [{"kind": str(c), "order": c.order, "size": c.size} for c in self.components]


def component_summary(g) -> ComponentSummary:
    adj = g.adj
    out = []
    for comp in connected_components(g):
        degs = Counter(len(adj[v]) for v in comp)
        size = sum(len(adj[v]) for v in comp) // 2
        order = len(comp)
        if order == 1:
            kind = "isolated"
        elif size == order - 1 and degs[1] == 2 and degs[1] + degs[2] == order:
            kind = "path"
        elif order >= 3 and degs[2] == order:
            kind = "cycle"
        else:
            kind = "other"
        out.append(ComponentInfo(order, size, kind))
    return ComponentSummary(out)


@dataclass
class IsomorphismWitness:
    mapping: list
    check_result: bool
    failure_edge: tuple | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.check_result

    def to_json(self) -> dict:
        return {"mapping": list(self.mapping), "check_result": self.check_result,
                "failure_edge": list(self.failure_edge) if self.failure_edge else None,
                "detail": self.detail}


def check_mapping(a, b, mapping) -> IsomorphismWitness:
    """Does ``i -> mapping[i]`` carry edges of a onto edges of b, bijectively?"""
    mapping = list(mapping)
    na, nb = _order(a), _order(b)
    if na != nb or len(mapping) != na or sorted(mapping) != list(range(nb)):
        return IsomorphismWitness(mapping, False, detail="mapping is not a bijection")
    if _size(a) != _size(b):
        return IsomorphismWitness(mapping, False, detail=f"sizes differ: {_size(a)} vs {_size(b)}")
    bsets = [set(r) for r in b.adj]
    for i, row in enumerate(a.adj):
        for j in row:
            if i < j and mapping[j] not in bsets[mapping[i]]:
                return IsomorphismWitness(mapping, False, (i, j), "edge maps to a non-edge")
    # edges inject into edges and the counts agree, so non-edges go to non-edges
    return IsomorphismWitness(mapping, True)


def path_gap_map(alpha) -> tuple:
    """Occupancy vector of the multiset graph on a path -> 1-based token positions on the longer path.

    Entry ``i`` of ``alpha`` (for ``i`` below the last) becomes ``alpha[i]``
    empty vertices followed by one occupied vertex; the last entry becomes
    trailing empty vertices.
    """
    out = []
    pos = 0
    for a in alpha[:-1]:
        pos += a + 1
        out.append(pos)
    return tuple(out)


def path_gap_unmap(beta, n: int) -> tuple:
    """Inverse of :func:`path_gap_map` for 1-based positions on a path with ``n`` vertices."""
    out = []
    prev = 0
    for b in beta:
        out.append(b - prev - 1)
        prev = b
    out.append(n - prev)
    return tuple(out)


def verify_path_token_isomorphism(n: int, k: int) -> IsomorphismWitness:
    """Check the gap-encoding bijection between k tokens on P_n and n-k stackable tokens on P_{k+1}."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    stacked = build(make_path(k + 1), TokenSpec(n - k, n - k, TokenMode.INDIST))
    tokens = build(make_path(n), TokenSpec(k, 1, TokenMode.INDIST))
    mapping = []
    for entries in stacked.vertices:
        occupancy = [0] * (k + 1)
        for v in entries:
            occupancy[v] += 1
        positions = path_gap_map(occupancy)
        mapping.append(tokens.index_of(tuple(p - 1 for p in positions)))
    return check_mapping(stacked, tokens, mapping)


def verify_complement_isomorphism(g: BaseGraph, k: int) -> IsomorphismWitness:
    """Check that swapping occupied and empty vertices maps F_k(g) onto F_{n-k}(g)."""
    n = g.n
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got n={n}, k={k}")
    a = build(g, TokenSpec(k, 1, TokenMode.INDIST))
    b = build(g, TokenSpec(n - k, 1, TokenMode.INDIST))
    mapping = [b.index_of(tuple(v for v in range(n) if v not in set(c))) for c in a.vertices]
    return check_mapping(a, b, mapping)


def cartesian_power(g: BaseGraph, k: int, cap: int = 1_000_000) -> BaseGraph:
    """k-fold Cartesian product of ``g``; vertex ``i`` is the i-th tuple of ``product(range(n), repeat=k)``."""
    n = g.n
    if n**k > cap:
        raise TooLargeError(n**k, cap)
    weights = [n ** (k - 1 - q) for q in range(k)]
    pairs = []
    for i, tup in enumerate(product(range(n), repeat=k)):
        for q, u in enumerate(tup):
            for w in g.adj[u]:
                if w > u:
                    pairs.append((i, i + (w - u) * weights[q]))
    return from_edge_list(n**k, pairs, f"{g}^{k}")


def verify_cartesian_isomorphism(g: BaseGraph, k: int, cap: int = 1_000_000) -> IsomorphismWitness:
    """Identity on token tuples between k distinct uncapped tokens on g and the Cartesian power."""
    st = build(g, TokenSpec(k, k, TokenMode.DIST), cap=cap)
    prod = cartesian_power(g, k, cap=cap)
    n = g.n
    mapping = []
    for tup in st.vertices:
        idx = 0
        for x in tup:
            idx = idx * n + x
        mapping.append(idx)
    return check_mapping(st, prod, mapping)


# Exact isomorphism for small graphs: joint colour refinement of the disjoint
# union, then individualise-and-refine backtracking over matching classes.

def _refine(adj, colors: list[int]) -> list[int]:
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        palette = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(palette) == len(set(colors)):
            return new
        colors = new


def _balanced(colors: list[int], na: int) -> bool:
    return Counter(colors[:na]) == Counter(colors[na:])


@dataclass
class IsomorphismResult:
    isomorphic: bool
    mapping: list | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.isomorphic


def are_isomorphic_small(a, b, cap: int = SMALL_GRAPH_CAP) -> IsomorphismResult:
    na, nb = _order(a), _order(b)
    if na != nb:
        return IsomorphismResult(False, reason="orders differ")
    if _size(a) != _size(b):
        return IsomorphismResult(False, reason="sizes differ")
    if sorted(len(r) for r in a.adj) != sorted(len(r) for r in b.adj):
        return IsomorphismResult(False, reason="degree sequences differ")
    if na > cap:
        raise TooLargeError(na, cap)
    adj = [list(r) for r in a.adj] + [[na + w for w in r] for r in b.adj]
    colors = _refine(adj, [0] * (2 * na))
    if not _balanced(colors, na):
        return IsomorphismResult(False, reason="colour refinement separates the graphs")
    mapping = _search(adj, colors, na, a, b)
    if mapping is None:
        return IsomorphismResult(False, reason="no colour-respecting bijection")
    return IsomorphismResult(True, mapping)


def _search(adj, colors, na, a, b):
    classes: dict[int, list[int]] = {}
    for v in range(na):
        classes.setdefault(colors[v], []).append(v)
    target = next((c for c in sorted(classes) if len(classes[c]) > 1), None)
    if target is None:
        where = {colors[na + w]: w for w in range(na)}
        mapping = [where[colors[v]] for v in range(na)]
        return mapping if check_mapping(a, b, mapping) else None
    x = classes[target][0]
    fresh = max(colors) + 1
    for y in range(na, 2 * na):
        if colors[y] != target:
            continue
        trial = list(colors)
        trial[x] = trial[y] = fresh
        trial = _refine(adj, trial)
        if _balanced(trial, na):
            found = _search(adj, trial, na, a, b)
            if found is not None:
                return found
    return None
