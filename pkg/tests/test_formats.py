import networkx as nx
import pytest
from hypothesis import given

from biclique_lab.formats import (
    FormatError,
    parse_graph,
    parse_graph6,
    parse_poset,
    render_graph,
    render_graph6,
    render_poset,
    to_dot,
)
from biclique_lab.graph import Graph, named_graph
from biclique_lab.posets import Poset

from conftest import graphs


def test_parse_with_comments_and_blank_lines():
    text = "# a path\n\n4 3\n0 1  # first\n1 2\n\n2 3\n"
    assert parse_graph(text) == named_graph("path", 4)


def test_isolated_vertices_survive():
    g = parse_graph("5 1\n0 1\n")
    assert g.n == 5 and g.edge_count() == 1


@pytest.mark.parametrize(
    "text,line,fragment",
    [
        ("3 1\n1 1\n", 2, "self-loop"),
        ("3 1\n0 3\n", 2, "out of range"),
        ("3 2\n0 1\n1 0\n", 3, "duplicate"),
        ("3 2\n0 1\n", 1, "announces 2"),
        ("3 1\n0 1\n1 2\n", 3, "announces 1"),
        ("# c\nthree 1\n0 1\n", 2, "header"),
        ("3 1\n0 x\n", 2, "edge line"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(FormatError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert fragment in str(info.value)


def test_empty_input():
    with pytest.raises(FormatError):
        parse_graph("# nothing\n\n")


@given(graphs(1, 9))
def test_edge_list_round_trip(g):
    assert parse_graph(render_graph(g, ["note"])) == g


@given(graphs(1, 12))
def test_graph6_matches_networkx(g):
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges())
    expected = nx.to_graph6_bytes(ref, header=False).decode().strip()
    assert render_graph6(g) == expected
    assert parse_graph6(expected) == g
    assert parse_graph(expected + "\n") == g
    assert parse_graph(">>graph6<<" + expected) == g


def test_graph6_errors():
    with pytest.raises(FormatError):
        parse_graph6("Dh")  # body too short for n = 5
    with pytest.raises(FormatError) as info:
        parse_graph("Bw\nBw\n")
    assert info.value.line == 2


def test_render_graph_layout():
    text = render_graph(named_graph("path", 3), ["hello"])
    assert text == "# hello\n3 2\n0 1\n1 2\n"


def test_poset_round_trip_and_errors():
    p = Poset.from_pairs(4, [(0, 1), (1, 2)])
    assert parse_poset(render_poset(p)) == p
    assert parse_poset("3\n2 0\n2 1\n").pairs() == [(2, 0), (2, 1)]
    with pytest.raises(FormatError) as info:
        parse_poset("2\n0 2\n")
    assert info.value.line == 2
    with pytest.raises(FormatError):
        parse_poset("2\n0 1\n1 0\n")
    with pytest.raises(FormatError):
        parse_poset("x\n")


def test_dot_output():
    dot = to_dot(Graph.from_edges(2, [(0, 1)]), ["p", "q"], name="KB")
    assert dot.splitlines() == ["graph KB {", '  0 [label="p"];', '  1 [label="q"];', "  0 -- 1;", "}"]
