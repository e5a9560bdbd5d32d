# SPDX-License-Identifier: MPL-2.0
import math

import numpy as np
import pytest

from locdom.engine.families import GraphFamily, generate
from locdom.engine.graph import (
    Graph,
    bits,
    cartesian_product,
    complement,
    distance,
    emit_edge_list,
    girth,
    mask_of,
    parse_edge_list,
    square,
)
from locdom.exceptions import DomainError, GraphFormatError


def _path(n: int) -> Graph:
    return generate(GraphFamily.of("path", n))


def test_bits_and_mask_of_agree():
    assert list(bits(0b101001)) == [0, 3, 5]
    assert mask_of([0, 3, 5]) == 0b101001
    assert list(bits(0)) == []


def test_worked_graph_basics(worked_graph):
    assert worked_graph.n == 6
    assert worked_graph.m == 7
    assert worked_graph.max_degree == 3
    assert worked_graph.neighbors(4) == [1, 3, 5]
    assert worked_graph.closed_mask(0) == mask_of([0, 1, 3])
    assert worked_graph.label(2) == "c"
    assert worked_graph.edges()[0] == (0, 1)
    assert worked_graph.is_connected()
    assert not worked_graph.is_tree()


def test_labels_do_not_affect_equality(worked_graph):
    plain = Graph.from_edges(6, worked_graph.edges())
    assert plain == worked_graph
    assert plain.label(2) == "2"


@pytest.mark.parametrize(
    "rows",
    [
        (0b10, 0b00),  # not symmetric
        (0b01,),  # self-loop
        (0b100, 0b000),  # neighbour out of range
    ],
)
def test_invalid_rows_rejected(rows):
    with pytest.raises(DomainError):
        Graph(len(rows), rows)


def test_from_edges_rejects_bad_input():
    with pytest.raises(DomainError):
        Graph.from_edges(0, [])
    with pytest.raises(DomainError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(DomainError):
        Graph.from_edges(3, [(1, 1)])


def test_from_adjacency_and_back(worked_graph):
    g = Graph.from_adjacency(worked_graph.adjacency_matrix().astype(int))
    assert g == worked_graph
    with pytest.raises(DomainError):
        Graph.from_adjacency(np.array([[0, 1], [0, 0]]))
    with pytest.raises(DomainError):
        Graph.from_adjacency(np.eye(2))


def test_adjacency_matrix_is_read_only(worked_graph):
    adj = worked_graph.adjacency_matrix()
    with pytest.raises(ValueError):
        adj[0, 0] = True


def test_networkx_round_trip(worked_graph):
    assert Graph.from_networkx(worked_graph.to_networkx()) == worked_graph


def test_complement_involution(worked_graph):
    co = complement(worked_graph)
    assert co.m == 15 - 7
    assert complement(co) == worked_graph
    assert complement(Graph.empty(1)) == Graph.empty(1)


def test_cartesian_product_sizes_and_labels():
    g = cartesian_product(_path(3), _path(2))
    assert g.n == 6
    assert g.m == 3 * 1 + 2 * 2
    assert g.label(3) == "(1,1)"
    # rung edges join (u, 0) and (u, 1)
    assert all(g.has_edge(2 * u, 2 * u + 1) for u in range(3))


def test_square_of_path():
    sq = square(_path(4))
    assert sq.m == 5
    assert sq.has_edge(0, 2)
    assert not sq.has_edge(0, 3)


def test_distance_and_girth():
    p = _path(5)
    assert distance(p, 0, 4) == 4
    assert distance(Graph.empty(2), 0, 1) == math.inf
    assert girth(generate(GraphFamily.of("cycle", 5))) == 5
    assert girth(p) == math.inf


def test_induced_subgraph_keeps_labels(worked_graph):
    sub = worked_graph.induced_subgraph([0, 1, 4, 3])
    assert sub.n == 4
    assert sub.m == 4
    assert [sub.label(i) for i in range(4)] == ["a", "b", "d", "e"]
    with pytest.raises(DomainError):
        worked_graph.induced_subgraph([])


def test_vertex_range_checked(worked_graph):
    with pytest.raises(DomainError):
        worked_graph.neighbors(6)
    with pytest.raises(DomainError):
        worked_graph.has_edge(0, -1)


def test_edge_list_codec(worked_graph):
    text = emit_edge_list(worked_graph)
    assert text.splitlines()[0] == "6 7"
    assert parse_edge_list(text) == worked_graph


def test_edge_list_comments_and_blank_lines():
    g = parse_edge_list("# header next\n\n3 2\n0 1  # first\n1 2\n")
    assert g.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("3 1\n0 0\n", 2),
        ("3 2\n0 1\n1 0\n", 3),
        ("3 1\n0 5\n", 2),
        ("3 1\n0 x\n", 2),
        ("3 1\n0 1 2\n", 2),
        ("0 0\n", 1),
    ],
)
def test_edge_list_errors_carry_line(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_edge_list_count_mismatch():
    with pytest.raises(GraphFormatError, match="announces 2 edges"):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(GraphFormatError, match="header"):
        parse_edge_list("# nothing\n")
