# SPDX-License-Identifier: MPL-2.0
"""Exhaustive checks over every labeled graph of small order.

Orders up to five run by default; n = 6 is marked ``slow``.
"""
from itertools import combinations

import pytest

from locdom.engine.codes import Code, CodeKind, Form, check_mask
from locdom.engine.families import GraphFamily, generate
from locdom.engine.graph import mask_of
from locdom.engine.locator import OutcomeTag, locate, sensor_reports
from locdom.engine.solvers import SolverMethod, minimum_code
from locdom.engine.sweep import labeled_graphs

ORDERS = [1, 2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)]


@pytest.mark.parametrize("n", ORDERS)
def test_definition_and_characterization_agree_on_every_code(n):
    for g in labeled_graphs(n):
        for mask in range(1, 1 << n):
            for kind in (CodeKind.SLD, CodeKind.DLD):
                definition = check_mask(g, mask, kind, Form.DEFINITION)
                characterization = check_mask(g, mask, kind, Form.CHARACTERIZATION)
                assert definition == characterization, (g.edges(), mask, kind)


@pytest.mark.parametrize("n", ORDERS)
def test_branch_and_bound_matches_oracle_everywhere(n):
    for g in labeled_graphs(n):
        for kind in CodeKind:
            fast = minimum_code(g, kind)
            oracle = minimum_code(g, kind, method=SolverMethod.EXHAUSTIVE)
            assert (fast.value, fast.witness) == (oracle.value, oracle.witness), (g.edges(), kind)


@pytest.mark.parametrize("kind", [CodeKind.SLD, CodeKind.DLD])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_locator_is_sound_and_safe(n, kind):
    for g in labeled_graphs(n):
        for mask in range(1, 1 << n):
            if not check_mask(g, mask, kind):
                continue
            code = Code.from_mask(mask)
            for size in (1, 2):
                for faults in combinations(range(n), size):
                    outcome = locate(g, code, sensor_reports(g, code, faults), decoding=kind)
                    if size == 1:
                        assert outcome.tag is OutcomeTag.LOCATED, (g.edges(), mask, faults)
                        assert outcome.vertex == faults[0]
                        continue
                    if outcome.tag is OutcomeTag.LOCATED:
                        assert outcome.vertex in faults, (g.edges(), mask, faults)
                    if not any(f in code for f in faults):
                        assert outcome.tag is OutcomeTag.MULTIPLE_OR_INCONSISTENT


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_tight_ladder_two_domination_skips_a_first_rung_vertex(n):
    ladder = generate(GraphFamily.of("ladder", n))
    first_rung = mask_of([0, 1])
    tight = 0
    for members in combinations(range(ladder.n), n):
        mask = mask_of(members)
        if check_mask(ladder, mask, CodeKind.DOM2):
            tight += 1
            assert mask & first_rung != first_rung, members
    assert tight > 0 or n == 1
