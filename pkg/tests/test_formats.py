import itertools
import json

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supertoken.builder import build
from supertoken.formats import (ParseError, dumps, from_graph6, graph_to_json, json_safe,
                                parse_edge_list, to_dot, to_edge_list, to_graph6)
from supertoken.graph import from_edge_list, make_cycle, make_path
from supertoken.tokens import TokenSpec


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(len(g.adj)))
    h.add_edges_from((i, j) for i, row in enumerate(g.adj) for j in row)
    return h


def test_graph6_known_strings():
    assert to_graph6(from_edge_list(0, [])) == b"?"
    assert to_graph6(from_edge_list(1, [])) == b"@"
    assert to_graph6(make_path(3)) == nx.to_graph6_bytes(nx.path_graph(3), header=False).strip()
    # 63 vertices switches to the four-byte size field
    big = make_cycle(63)
    assert to_graph6(big) == nx.to_graph6_bytes(nx.cycle_graph(63), header=False).strip()


def test_graph6_of_built_graph_matches_networkx():
    st_ = build(make_cycle(4), TokenSpec(4, 3))
    assert to_graph6(st_) == nx.to_graph6_bytes(_nx(st_), header=False).strip()
    back = from_graph6(to_graph6(st_))
    assert back.edges == set(st_.edges())


def test_graph6_errors():
    with pytest.raises(ParseError):
        from_graph6(b"")
    with pytest.raises(ParseError):
        from_graph6(b"C~~")
    with pytest.raises(ParseError):
        from_graph6(b"A\x20")
    assert from_graph6(">>graph6<<Bw").size == 3


@st.composite
def graphs(draw):
    n = draw(st.integers(0, 70))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=60)) if pairs else []
    return from_edge_list(n, chosen)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_graph6_round_trip_and_oracle(g):
    data = to_graph6(g)
    assert data == nx.to_graph6_bytes(_nx(g), header=False).strip()
    back = from_graph6(data)
    assert (back.n, back.edges) == (g.n, g.edges)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_edge_list_round_trip(g):
    text = to_edge_list(g)
    back = parse_edge_list(text)
    assert (back.n, back.edges) == (g.n, g.edges)
    assert to_edge_list(back) == text


def test_edge_list_parsing():
    g = parse_edge_list("# triangle\n3 3\n0 1\n1 2  # middle\n2 0\n")
    assert g.size == 3
    with pytest.raises(ParseError, match="line 3"):
        parse_edge_list("3 2\n0 1\n0 3\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_edge_list("3 1\n1 1\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_edge_list("3 1\n1 x\n")
    with pytest.raises(ParseError, match="announces"):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(ParseError, match="header"):
        parse_edge_list("# nothing\n")
    with pytest.warns(UserWarning, match="duplicate"):
        assert parse_edge_list("3 2\n0 1\n1 0\n").size == 1


def test_dot():
    st_ = build(make_path(3), TokenSpec(2, 1))
    dot = to_dot(st_)
    assert dot.startswith("graph G {") and '0 [label="{0,1}"]' in dot and "0 -- 1;" in dot
    assert "label" not in to_dot(make_path(2))


def test_json():
    assert json_safe({"a": 2**53 - 1, "b": 2**53, "c": [True, None, -(2**60)]}) == \
        {"a": 2**53 - 1, "b": str(2**53), "c": [True, None, str(-(2**60))]}
    doc = json.loads(dumps(graph_to_json(build(make_path(3), TokenSpec(2, 2, "dist")))))
    assert doc["order"] == 9 and doc["vertices"][0] == "(0,0)" and doc["size"] == len(doc["edges"])
