import networkx as nx
import pytest

from locdom.engine.families import FamilyTag, GraphFamily, ThresholdStep, generate
from locdom.engine.graph import Graph
from locdom.engine.order import (
    TwinKind,
    dilworth_decomposition,
    dilworth_number,
    is_threshold,
    is_twin_free,
    ld_lower_bound,
    sperner_capacity,
    sperner_lower_bound,
    threshold_creation_sequence,
    twins,
    vicinal_preorder,
)
from locdom.exceptions import CapacityOverflowError, DomainError


def _family(name, *params):
    return generate(GraphFamily.of(name, *params))


def test_preorder_relation(worked_graph):
    pre = vicinal_preorder(worked_graph, verify=True)
    assert pre.related(0, 4)
    assert pre.strictly_below(0, 4)
    assert not pre.related(4, 0)
    assert all(pre.related(x, x) for x in range(6))
    assert nx.is_directed_acyclic_graph(pre.quotient)


def test_star_classes_and_maximal_vertices():
    pre = vicinal_preorder(_family("star", 4))
    assert pre.classes == ((0,), (1, 2, 3))
    assert pre.has_twin(2)
    assert not pre.has_twin(0)
    assert pre.maximal_vertices() == [0]
    assert pre.is_chain([0, 1])
    assert pre.is_total()


def test_twins():
    assert twins(_family("complete", 2), 0, 1) is TwinKind.TRUE_TWINS
    assert twins(_family("star", 3), 1, 2) is TwinKind.FALSE_TWINS
    assert twins(_family("path", 4), 0, 1) is TwinKind.NOT_TWINS
    with pytest.raises(DomainError):
        twins(_family("path", 4), 1, 1)


def test_twin_free(worked_graph):
    assert is_twin_free(worked_graph)
    assert not is_twin_free(_family("star", 3))


def test_dilworth_witnesses(worked_graph):
    result = dilworth_decomposition(worked_graph)
    assert result.width == len(result.antichain) == len(result.chains)
    assert sorted(v for chain in result.chains for v in chain) == list(range(6))
    pre = vicinal_preorder(worked_graph)
    assert pre.is_antichain(result.antichain)
    assert all(pre.is_chain(chain) for chain in result.chains)
    assert result.to_dict()["width"] == result.width


@pytest.mark.parametrize(
    ("graph", "width"),
    [
        (Graph.empty(3), 1),
        (Graph.empty(1), 1),
        (generate(GraphFamily.of("complete", 4)), 1),
        (generate(GraphFamily.of("star", 5)), 1),
        (generate(GraphFamily.of("path", 4)), 2),
        (generate(GraphFamily.of("cycle", 5)), 5),
    ],
)
def test_dilworth_numbers(graph, width):
    assert dilworth_number(graph) == width


def test_threshold_recognition():
    seq = ThresholdStep.parse("iuiu")
    g = generate(GraphFamily(FamilyTag.THRESHOLD, seq))
    assert is_threshold(g)
    rebuilt = generate(GraphFamily(FamilyTag.THRESHOLD, threshold_creation_sequence(g)))
    assert sorted(map(g.degree, range(g.n))) == sorted(map(rebuilt.degree, range(rebuilt.n)))
    assert not is_threshold(_family("path", 4))
    assert threshold_creation_sequence(_family("cycle", 4)) is None


@pytest.mark.parametrize(("k", "capacity"), [(1, 2), (2, 4), (3, 6), (4, 10), (5, 15)])
def test_sperner_capacity(k, capacity):
    assert sperner_capacity(k) == capacity


def test_sperner_capacity_guards():
    with pytest.raises(DomainError):
        sperner_capacity(0)
    with pytest.raises(CapacityOverflowError):
        sperner_capacity(10, limit=100)
    with pytest.raises(CapacityOverflowError):
        sperner_capacity(70)


@pytest.mark.parametrize(("n", "k"), [(1, 1), (2, 1), (3, 2), (6, 3), (7, 4), (10, 4), (11, 5)])
def test_sperner_lower_bound(n, k):
    assert sperner_lower_bound(n) == k


@pytest.mark.parametrize(("n", "k"), [(1, 1), (2, 1), (3, 2), (5, 2), (6, 3), (10, 3), (11, 4)])
def test_ld_lower_bound(n, k):
    assert ld_lower_bound(n) == k
