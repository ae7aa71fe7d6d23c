import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qspec.formats import (from_edge_list, from_graph6, parse_graph, to_edge_list,
                           to_graph6)
from qspec.graph import Graph, GraphError, complete_graph, cycle_graph


@st.composite
def graphs(draw, max_n=70):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph(n)
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


def test_known_strings():
    assert to_graph6(complete_graph(4)) == "C~"
    assert to_graph6(cycle_graph(4)) == "Cl"
    assert to_graph6(Graph(1)) == "@"
    assert from_graph6(">>graph6<<C~") == complete_graph(4)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_round_trip(g):
    assert from_graph6(to_graph6(g)) == g
    assert from_edge_list(to_edge_list(g)) == g


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=80))
def test_matches_networkx_encoder(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    ref = nx.to_graph6_bytes(h, header=False).strip().decode()
    assert to_graph6(g) == ref


def test_large_order_prefix():
    g = Graph(100, [(0, 99)])
    s = to_graph6(g)
    assert s[0] == "~"
    assert from_graph6(s) == g


@pytest.mark.parametrize("bad", ["", "C", "C~~", "Cz\x01"])
def test_malformed_graph6(bad):
    with pytest.raises(GraphError):
        from_graph6(bad)


def test_edge_list_comments_and_header():
    text = "# a triangle\nn 3\n0 1\n1 2  # inline\n0 2\n"
    assert from_edge_list(text) == cycle_graph(3)
    assert parse_graph(text) == cycle_graph(3)
    assert parse_graph("C~\n") == complete_graph(4)
