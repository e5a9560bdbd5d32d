# SPDX-License-Identifier: MPL-2.0
import json

import pytest

from locdom.engine.codes import CodeKind
from locdom.engine.loader import family_graph, load_graph, load_scenario
from locdom.exceptions import DomainError, GraphFormatError


def test_load_graph_sources(worked_graph, fixtures_dir):
    assert load_graph("EkSg") == worked_graph
    assert load_graph(str(fixtures_dir / "worked_example.edges")) == worked_graph
    assert load_graph(str(fixtures_dir / "worked_example.g6")) == worked_graph


def test_load_graph_errors(tmp_path):
    with pytest.raises(GraphFormatError):
        load_graph("not a graph")
    empty = tmp_path / "empty.g6"
    empty.write_text("# nothing here\n", encoding="ascii")
    with pytest.raises(GraphFormatError, match="no graph6 record"):
        load_graph(str(empty))


def test_family_graph():
    assert family_graph("path", 4).m == 3
    assert family_graph("rook", 3, 2).n == 6
    assert family_graph("threshold", sequence="iuu").m == 3


@pytest.mark.parametrize(
    ("args", "message"),
    [
        (("wheel", 4), "unknown family"),
        (("threshold",), "--sequence"),
        (("path",), "--n"),
        (("complete_bipartite", 2), "--m"),
    ],
)
def test_family_graph_errors(args, message):
    with pytest.raises(DomainError, match=message):
        family_graph(*args)


def test_load_scenarios(fixtures_dir):
    ld = load_scenario(fixtures_dir / "scenario_ld_false_positive.json")
    assert ld.code == [1, 3, 5]
    assert ld.decoding is CodeKind.SLD
    sld = load_scenario(fixtures_dir / "scenario_sld_two_faults.yaml")
    assert sld.code == [0, 2, 3, 5]
    assert sld.faults == [0, 2]
    assert sld.decoding is CodeKind.SLD


@pytest.mark.parametrize(
    ("name", "content", "message"),
    [
        ("s.txt", "{}", "unsupported scenario format"),
        ("s.yaml", "- 1\n- 2\n", "must be a mapping"),
        ("s.json", json.dumps({"graph6": "EkSg", "code": []}), "code"),
        ("s.json", json.dumps({"graph6": "EkSg", "code": [1], "decoding": "LD"}), "decoding"),
        ("s.yaml", "", "graph6"),
    ],
)
def test_bad_scenarios(tmp_path, name, content, message):
    path = tmp_path / name
    path.write_text(content, encoding="utf-8")
    with pytest.raises(DomainError, match=message):
        load_scenario(path)
