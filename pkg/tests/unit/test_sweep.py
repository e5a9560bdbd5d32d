import importlib

import pytest

from locdom.engine.harness import THEOREM_IDS, TheoremCheck, TheoremReport, TheoremStatus
from locdom.engine.schema import SweepOptions
from locdom.engine.sweep import (
    SweepReport,
    graph6_source,
    labeled_graphs,
    prufer_trees,
    resolve_source,
    sweep,
    tree_suite,
    unlabeled_trees,
)
from locdom.exceptions import DomainError
from locdom.ledger import CounterexampleLedger

sweep_module = importlib.import_module("locdom.engine.sweep")


def test_enumerator_counts():
    assert sum(1 for _ in labeled_graphs(3)) == 8
    assert sum(1 for _ in labeled_graphs(1)) == 1
    assert sum(1 for _ in prufer_trees(4)) == 16
    assert [g.n for g in prufer_trees(1)] == [1]
    assert [g.m for g in prufer_trees(2)] == [1]
    assert sum(1 for _ in unlabeled_trees(6)) == 6
    assert sum(1 for _ in tree_suite(5)) == 8


def test_enumerated_trees_are_trees():
    assert all(t.is_tree() for t in prufer_trees(5))
    assert all(t.is_tree() and t.n == 7 for t in unlabeled_trees(7))


@pytest.mark.parametrize(
    ("enumerate_", "n"),
    [(labeled_graphs, 8), (labeled_graphs, 0), (prufer_trees, 9), (unlabeled_trees, 17)],
)
def test_enumerator_limits(enumerate_, n):
    with pytest.raises(DomainError):
        next(iter(enumerate_(n)))


def test_resolve_source(fixtures_dir):
    assert sum(1 for _ in resolve_source("labeled:3")) == 8
    assert sum(1 for _ in resolve_source("trees:4")) == 5
    path = fixtures_dir / "counterexample_seed.g6"
    assert [g.n for g in resolve_source(str(path))] == [1, 2, 3, 4, 6]
    assert [g.n for g in graph6_source(path)] == [1, 2, 3, 4, 6]
    with pytest.raises(DomainError, match="expects an integer"):
        resolve_source("labeled:x")
    with pytest.raises(DomainError, match="neither"):
        resolve_source("nowhere:3")


def test_small_sweep_passes():
    report = sweep(labeled_graphs(3))
    assert report.passed
    assert report.graphs_checked == 8
    assert not report.halted
    for theorem in THEOREM_IDS:
        assert sum(report.counts[theorem].values()) == 8
    assert report.counts["code_chain"]["pass"] == 8
    assert "graphs checked: 8" in report.to_table()
    assert report.to_dict()["failures"] == []


def _failing(graph, *, settings=None, include_complement=True):
    return TheoremReport(
        graph6=f"n{graph.n}m{graph.m}",
        parameters={"n": graph.n},
        checks=[TheoremCheck("code_chain", TheoremStatus.FAIL, "forced failure")],
    )


def test_sweep_halts_on_first_failure(monkeypatch, tmp_path):
    monkeypatch.setattr(sweep_module, "check_graph", _failing)
    ledger = tmp_path / "ce.jsonl"
    report = sweep(labeled_graphs(3), SweepOptions(ledger_path=str(ledger)))
    assert report.halted
    assert report.graphs_checked == 1
    assert not report.passed
    events = list(CounterexampleLedger(ledger).read())
    assert [e.theorem for e in events] == ["code_chain"]
    assert events[0].graph6 == "n3m0"


def test_keep_going_checks_everything(monkeypatch, tmp_path):
    monkeypatch.setattr(sweep_module, "check_graph", _failing)
    ledger = tmp_path / "ce.jsonl"
    options = SweepOptions(keep_going=True, ledger_path=str(ledger))
    report = sweep(labeled_graphs(3), options)
    assert not report.halted
    assert report.graphs_checked == 8
    assert len(report.failures) == 8
    assert len(list(CounterexampleLedger(ledger).read())) == 8
    assert report.counts["code_chain"]["fail"] == 8
    table = report.to_table()
    assert "FAIL code_chain on n3m0: forced failure" in table


def test_sorted_failures_are_order_independent():
    a, b = SweepReport(), SweepReport()
    first = TheoremReport("B", {}, [TheoremCheck("code_chain", TheoremStatus.FAIL, "x")])
    second = TheoremReport("A", {}, [TheoremCheck("code_chain", TheoremStatus.FAIL, "y")])
    a.add(first)
    a.add(second)
    b.add(second)
    b.add(first)
    assert a.to_dict() == b.to_dict()
    assert [f["graph6"] for f in a.sorted_failures()] == ["A", "B"]
