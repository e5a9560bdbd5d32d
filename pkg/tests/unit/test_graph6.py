import networkx as nx
import pytest

from locdom.engine.graph import Graph
from locdom.engine.graph6 import emit_graph6, graph_key, iter_graph6_file, parse_graph6
from locdom.exceptions import GraphFormatError, UnsupportedSizeError


def test_worked_graph_record(worked_graph):
    assert emit_graph6(worked_graph) == "EkSg"
    assert parse_graph6("EkSg") == worked_graph


@pytest.mark.parametrize(
    ("record", "n", "m"),
    [("@", 1, 0), ("A_", 2, 1), ("A?", 2, 0), ("Bw", 3, 3), ("Cl", 4, 4), ("C~", 4, 6)],
)
def test_small_records(record, n, m):
    g = parse_graph6(record)
    assert (g.n, g.m) == (n, m)
    assert emit_graph6(g) == record


def test_header_and_newline_accepted(worked_graph):
    assert parse_graph6(">>graph6<<EkSg\n") == worked_graph


def test_long_form_parse():
    record = "~??~" + "?" * 326
    g = parse_graph6(record)
    assert g.n == 63
    assert g.m == 0
    assert g == Graph.from_networkx(nx.from_graph6_bytes(record.encode()))


def test_emit_refuses_long_form():
    with pytest.raises(UnsupportedSizeError):
        emit_graph6(Graph.empty(63))


def test_graph_key_falls_back_to_edge_list(worked_graph):
    assert graph_key(worked_graph) == "EkSg"
    assert graph_key(Graph.from_edges(63, [(0, 62)])) == "63 1\n0 62\n"


@pytest.mark.parametrize(
    ("record", "offset"),
    [
        ("", 0),
        ("E!Sg", 1),
        ("EkS", 3),
        ("EkSgg", 4),
        ("~??", 3),
        ("~~??????", 1),
        ("~??E", 0),
        ("?", 0),
    ],
)
def test_malformed_records_report_offset(record, offset):
    with pytest.raises(GraphFormatError) as info:
        parse_graph6(record)
    assert info.value.offset == offset


def test_offsets_count_the_header():
    with pytest.raises(GraphFormatError) as info:
        parse_graph6(">>graph6<<E!Sg")
    assert info.value.offset == 11


def test_file_iteration_skips_comments(tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text("# two graphs\n@\n\nEkSg\n", encoding="ascii")
    records = [(line, record, g.n) for line, record, g in iter_graph6_file(path)]
    assert records == [(2, "@", 1), (4, "EkSg", 6)]


def test_file_errors_carry_line(tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("@\n!!\n", encoding="ascii")
    with pytest.raises(GraphFormatError) as info:
        list(iter_graph6_file(path))
    assert info.value.line == 2
    assert "line 2" in str(info.value)
