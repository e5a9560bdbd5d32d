# SPDX-License-Identifier: MPL-2.0
"""Every construction claim recomputed with the exact solvers."""
import pytest

from locdom.engine.closed_forms import ClosedFormQuery, closed_form
from locdom.engine.codes import CodeKind
from locdom.engine.constructions import (
    complement_gap,
    realize_ld_dld,
    realize_ld_sld,
    sperner_extremal,
    verify_claim,
)
from locdom.engine.families import FamilyTag, GraphFamily, generate
from locdom.engine.harness import check_graph
from locdom.engine.solvers import minimum_code

LD_SLD_PAIRS = [(1, 1), (1, 2)] + [(2, b) for b in range(2, 6)] + [(3, b) for b in range(3, 11)]
LD_DLD_PAIRS = [(1, 1), (2, 2), (2, 3)] + [(3, b) for b in range(3, 8)]


@pytest.mark.parametrize(("a", "b"), LD_SLD_PAIRS)
def test_realize_ld_sld(a, b):
    result = verify_claim(realize_ld_sld(a, b))
    assert result.ok, result.to_dict()


@pytest.mark.parametrize(("a", "b"), LD_DLD_PAIRS)
def test_realize_ld_dld(a, b):
    result = verify_claim(realize_ld_dld(a, b))
    assert result.ok, result.to_dict()


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_sperner_extremal(k):
    claim = sperner_extremal(k)
    result = verify_claim(claim)
    assert result.ok, result.to_dict()


def test_sperner_extremal_passes_the_harness():
    report = check_graph(sperner_extremal(3).graph)
    assert report.passed, report.failures


def test_complement_gap():
    for claim in complement_gap(4):
        result = verify_claim(claim)
        assert result.ok, result.to_dict()


CLOSED_FORM_CASES = (
    [("path", (n,), kind) for n in range(2, 9) for kind in ("SLD", "DLD", "DOM2")]
    + [("cycle", (n,), kind) for n in range(5, 10) for kind in ("SLD", "DLD")]
    + [("ladder", (n,), kind) for n in range(2, 6) for kind in ("SLD", "DLD", "DOM2")]
    + [("ladder", (1,), kind) for kind in ("DLD", "DOM2")]
    + [("complete", (n,), "SLD") for n in range(1, 6)]
    + [("complete", (n,), "DLD") for n in range(2, 6)]
    + [("star", (n,), kind) for n in range(3, 7) for kind in ("SLD", "DLD")]
    + [("rook", (4, 2), "SLD"), ("rook", (5, 2), "SLD")]
    + [("discrete", (n,), kind.value) for n in range(1, 4) for kind in CodeKind]
)

LARGER_CLOSED_FORM_CASES = (
    [("path", (n,), kind) for n in range(9, 13) for kind in ("SLD", "DLD", "DOM2")]
    + [("cycle", (n,), kind) for n in range(10, 13) for kind in ("SLD", "DLD")]
    + [("ladder", (n,), kind) for n in range(6, 9) for kind in ("SLD", "DLD", "DOM2")]
    + [("complete", (n,), kind) for n in range(6, 9) for kind in ("SLD", "DLD")]
)


@pytest.mark.parametrize(
    ("family", "params", "kind"),
    CLOSED_FORM_CASES
    + [pytest.param(*case, marks=pytest.mark.slow) for case in LARGER_CLOSED_FORM_CASES],
)
def test_closed_forms_match_solver(family, params, kind):
    g = generate(GraphFamily.of(family, *params))
    expected = closed_form(ClosedFormQuery(FamilyTag(family), params, CodeKind(kind)))
    assert minimum_code(g, CodeKind(kind)).value == expected
