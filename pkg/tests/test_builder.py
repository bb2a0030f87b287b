import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_supertoken
from supertoken import kernels
from supertoken.builder import (TooLargeError, build, edge_class, edges_over_base_edge,
                                implicit_component, move_between, neighbors)
from supertoken.configs import ConfigError, Configuration, multiset_symmetric_difference
from supertoken.counting import order_of, per_edge_multiplier
from supertoken.graph import (GraphError, from_edge_list, make_complete, make_cycle, make_path,
                              make_star, relabel)
from supertoken.tokens import TokenMode, TokenSpec

FAMILIES = [make_path(4), make_cycle(4), make_star(3), make_complete(4), make_path(5),
            from_edge_list(5, [(0, 1), (1, 2), (2, 0), (2, 3)])]


def test_build_examples():
    st_ = build(make_cycle(4), TokenSpec(2, 1))
    assert (st_.order, st_.size) == (6, 8)
    st_ = build(make_cycle(4), TokenSpec(2, 2, "dist"))
    assert (st_.order, st_.size) == (16, 32)
    st_ = build(make_path(5), TokenSpec(5, 1))
    assert (st_.order, st_.size) == (1, 0)


def test_build_cap():
    with pytest.raises(TooLargeError, match="120"):
        build(make_star(4), TokenSpec(3, 2, "dist"), cap=100)


def test_neighbors_examples():
    c4 = make_cycle(4)
    got = [c.entries for c in neighbors(c4, TokenSpec(2, 2, "dist"), (0, 0))]
    assert got == [(0, 1), (0, 3), (1, 0), (3, 0)]
    got = [c.entries for c in neighbors(make_path(4), TokenSpec(3, 1, "dist"), (0, 1, 2))]
    assert got == [(0, 1, 3)]
    assert neighbors(make_path(1), TokenSpec(1, 1), (0,)) == []
    with pytest.raises(ConfigError):
        neighbors(c4, TokenSpec(2, 1), (0, 0))


def test_neighbors_agree_with_rows():
    for g in FAMILIES:
        for spec in (TokenSpec(3, 2), TokenSpec(2, 2, "dist"), TokenSpec(3, 1, "dist")):
            st_ = build(g, spec)
            for i in range(st_.order):
                row = [st_.vertices[j] for j in st_.adj[i]]
                assert [c.entries for c in neighbors(g, spec, st_.vertices[i])] == row


def test_against_naive_pairwise_oracle():
    for g in FAMILIES:
        for k in range(1, 4):
            for s in range(1, k + 1):
                for dist in (False, True):
                    spec = TokenSpec(k, s, "dist" if dist else "indist")
                    verts, edges = naive_supertoken(g.n, g.edges, k, s, dist)
                    st_ = build(g, spec)
                    assert st_.vertices == verts
                    assert st_.edge_pairs() == edges


@pytest.mark.skipif(not kernels.HAVE_COMPILED, reason="compiled kernel not built")
def test_kernels_agree():
    for g in FAMILIES + [make_cycle(6), make_star(5)]:
        for k in range(1, 5):
            for s in range(1, k + 1):
                for mode in ("indist", "dist"):
                    spec = TokenSpec(k, s, mode)
                    if order_of(g.n, spec) > 5000:
                        continue
                    a = build(g, spec, kernel="compiled")
                    b = build(g, spec, kernel="python")
                    assert a.kernel == "compiled" and b.kernel == "python"
                    assert a.vertices == b.vertices
                    assert a.indptr.tolist() == b.indptr.tolist()
                    assert a.indices.tolist() == b.indices.tolist()


def test_unknown_kernel():
    with pytest.raises(ValueError):
        build(make_path(3), TokenSpec(1, 1), kernel="gpu")


def test_move_between():
    assert move_between((0, 1), (0, 2), TokenMode.INDIST) == (1, 2, None)
    assert move_between((0, 1), (2, 3), TokenMode.INDIST) is None
    assert move_between((1, 0), (1, 3), TokenMode.DIST) == (0, 3, 1)
    assert move_between((0, 1), (1, 0), TokenMode.DIST) is None


def test_edges_over_base_edge():
    st_ = build(make_cycle(4), TokenSpec(2, 1))
    for u, v in make_cycle(4).sorted_edges():
        assert len(edges_over_base_edge(st_, u, v)) == 2
    with pytest.raises(GraphError):
        edges_over_base_edge(st_, 0, 2)
    st_ = build(make_star(4), TokenSpec(3, 2, "dist"))
    pairs = edges_over_base_edge(st_, 0, 1)
    assert len(pairs) == 69
    classes = {}
    for a, b in pairs:
        cls = edge_class(a, b, 0, 1, TokenMode.DIST)
        classes[cls] = classes.get(cls, 0) + 1
    assert classes == {(0, 0): 27, (0, 1): 18, (1, 0): 18, (1, 1): 6}


def test_per_edge_counts_are_uniform_and_cover():
    for g in FAMILIES:
        for spec in (TokenSpec(3, 2), TokenSpec(3, 2, "dist"), TokenSpec(4, 4)):
            st_ = build(g, spec)
            union = set()
            mult = per_edge_multiplier(g.n, spec)
            for u, v in g.sorted_edges():
                pairs = edges_over_base_edge(st_, u, v)
                assert len(pairs) == mult
                union |= {tuple(sorted((a.entries, b.entries))) for a, b in pairs}
            assert union == st_.edge_pairs()


def test_cartesian_degree_law():
    for g in FAMILIES:
        st_ = build(g, TokenSpec(3, 3, "dist"))
        for i, c in enumerate(st_.vertices):
            assert st_.degree(i) == sum(g.degree(x) for x in c)


def test_subset_chain():
    for g in FAMILIES:
        for mode in ("indist", "dist"):
            for k in range(2, 5):
                prev = None
                for s in range(1, k + 1):
                    cur = build(g, TokenSpec(k, s, mode))
                    if prev is not None:
                        assert set(prev.vertices) <= set(cur.vertices)
                        assert prev.edge_pairs() <= cur.edge_pairs()
                    prev = cur


def test_implicit_component():
    g = make_cycle(5)
    spec = TokenSpec(3, 2)
    assert len(implicit_component(g, spec, (0, 0, 1), 10_000)) == order_of(5, spec)
    assert implicit_component(g, spec, (0, 0, 1), 3) is None
    spec = TokenSpec(3, 1, "dist")
    assert len(implicit_component(make_path(3), spec, (0, 1, 2), 100)) == 1


def test_graph_interface():
    st_ = build(make_cycle(4), TokenSpec(2, 1))
    assert st_.label(0) == "{0,1}"
    assert st_.configuration(0) == Configuration((0, 1), TokenMode.INDIST)
    assert st_.index_of((2, 3)) == 5
    assert sum(st_.degrees()) == 2 * st_.size
    smaller = st_.with_edge_removed(*next(st_.edges()))
    assert smaller.size == st_.size - 1
    with pytest.raises(GraphError):
        st_.with_edge_removed(0, 5)


@st.composite
def build_cases(draw):
    n = draw(st.integers(2, 6))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=len(pairs)))
    k = draw(st.integers(1, 4))
    s = draw(st.integers(1, k))
    mode = draw(st.sampled_from(["indist", "dist"]))
    perm = draw(st.permutations(range(n)))
    return from_edge_list(n, chosen), TokenSpec(k, s, mode), list(perm)


@settings(max_examples=120, deadline=None)
@given(build_cases())
def test_build_invariants(case):
    g, spec, perm = case
    st_ = build(g, spec)
    assert st_.order == order_of(g.n, spec)
    assert st_.size == g.size * per_edge_multiplier(g.n, spec)
    assert all(a < b for a, b in zip(st_.vertices, st_.vertices[1:]))
    for i, j in st_.edges():
        a, b = st_.vertices[i], st_.vertices[j]
        mv = move_between(a, b, spec.mode)
        assert mv is not None and g.has_edge(mv[0], mv[1])
        if spec.mode is TokenMode.INDIST:
            assert multiset_symmetric_difference(a, b) == tuple(sorted(mv[:2]))
    # relabelling the base relabels the configurations and nothing else
    h = relabel(g, perm)
    st_h = build(h, spec)

    def image(c):
        m = tuple(perm[x] for x in c)
        return tuple(sorted(m)) if spec.mode is TokenMode.INDIST else m

    mapped = {tuple(sorted((image(a), image(b)))) for a, b in st_.edge_pairs()}
    assert mapped == st_h.edge_pairs()
