import pytest

from locdom.engine.families import FamilyTag, GraphFamily, ThresholdStep, generate
from locdom.exceptions import DomainError


@pytest.mark.parametrize(
    ("family", "params", "n", "m"),
    [
        ("path", (4,), 4, 3),
        ("path", (1,), 1, 0),
        ("cycle", (5,), 5, 5),
        ("star", (5,), 5, 4),
        ("complete", (4,), 4, 6),
        ("complete_bipartite", (2, 3), 5, 6),
        ("discrete", (3,), 3, 0),
        ("ladder", (3,), 6, 7),
        ("rook", (3, 2), 6, 9),
    ],
)
def test_family_sizes(family, params, n, m):
    g = generate(GraphFamily.of(family, *params))
    assert (g.n, g.m) == (n, m)


def test_star_centre_is_zero():
    g = generate(GraphFamily.of("star", 5))
    assert g.degree(0) == 4
    assert all(g.degree(v) == 1 for v in range(1, 5))


def test_networkx_backed_families_keep_vertex_order():
    assert generate(GraphFamily.of("path", 4)).edges() == [(0, 1), (1, 2), (2, 3)]
    assert generate(GraphFamily.of("cycle", 4)).edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert generate(GraphFamily.of("star", 1)).n == 1
    kab = generate(GraphFamily.of("complete_bipartite", 2, 3))
    assert [kab.degree(v) for v in range(5)] == [3, 3, 2, 2, 2]


def test_threshold_sequences():
    clique = generate(GraphFamily(FamilyTag.THRESHOLD, ThresholdStep.parse("iuu")))
    assert (clique.n, clique.m) == (3, 3)
    mixed = generate(GraphFamily(FamilyTag.THRESHOLD, ThresholdStep.parse("IUI")))
    assert mixed.edges() == [(0, 1)]
    assert mixed.isolated_vertices() == [2]


def test_threshold_parse_rejects_other_letters():
    with pytest.raises(DomainError, match="'x'"):
        ThresholdStep.parse("iux")


@pytest.mark.parametrize(
    ("family", "params"),
    [
        ("cycle", (2,)),
        ("path", (0,)),
        ("path", (3, 4)),
        ("rook", (3,)),
        ("threshold", ()),
        ("threshold", (0, 2)),
    ],
)
def test_invalid_parameters(family, params):
    with pytest.raises(DomainError):
        GraphFamily.of(family, *params)


def test_unknown_family_tag():
    with pytest.raises(ValueError):
        GraphFamily.of("wheel", 5)
