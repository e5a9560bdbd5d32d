# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 locdom contributors. See LICENSE for full terms.

"""Theorem harness: evaluate every known bound and equivalence on one graph.

Each check is a small function over precomputed :class:`_Facts`. A check
whose hypothesis does not hold reports ``not_applicable`` with the reason;
checks needing exact solver values report ``not_applicable`` as well when
the graph is above the exactness cap, and the report is flagged incomplete.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum

from locdom.engine.codes import (
    CodeKind,
    check_mask,
    drop_one_dld_code,
    forced_sld_codewords,
    is_code,
    non_codeword_isets,
)
from locdom.engine.graph import Graph, cartesian_product, complement, girth
from locdom.engine.graph6 import graph_key
from locdom.engine.order import (
    DilworthResult,
    TwinKind,
    VicinalPreorder,
    dilworth_decomposition,
    is_threshold,
    is_twin_free,
    sperner_capacity,
    sperner_lower_bound,
    twins,
    vicinal_preorder,
)
from locdom.engine.schema import SolverSettings
from locdom.engine.solvers import (
    SolverMethod,
    SolverResult,
    distance3_independence_number,
    enforce_cap,
    greedy_3distance_code,
    independence_number,
    minimum_code,
)
from locdom.engine.telemetry import GRAPHS_CHECKED, THEOREM_FAILURES
from locdom.engine.trees import (
    leaf_count,
    leaf_support_bound,
    support_vertices,
    tree_gamma_dld,
    tree_gamma_sld,
)
from locdom.exceptions import InvariantViolation, SolverCapExceeded
from locdom.logging_config import configure_logger

logger = configure_logger(__name__)

# graphs up to this order are also solved by the exhaustive oracle
ORACLE_LIMIT = 7

# solve order: each kind reuses the optima of the weaker kinds before it
_SOLVE_ORDER = (CodeKind.DOM, CodeKind.LD, CodeKind.DLD, CodeKind.SLD, CodeKind.DOM2)


class TheoremStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class TheoremCheck:
    theorem: str
    status: TheoremStatus
    detail: str = ""

    def to_dict(self) -> dict[str, str]:
        return {"theorem": self.theorem, "status": self.status.value, "detail": self.detail}


@dataclass
class TheoremReport:
    """Per-graph verdicts plus the parameter table they were computed from."""

    graph6: str
    parameters: dict[str, object]
    checks: list[TheoremCheck] = field(default_factory=list)
    incomplete: bool = False

    def status(self, theorem: str) -> TheoremStatus | None:
        for check in self.checks:
            if check.theorem == theorem:
                return check.status
        return None

    @property
    def failures(self) -> list[TheoremCheck]:
        return [c for c in self.checks if c.status is TheoremStatus.FAIL]

    @property
    def passed(self) -> bool:
        return not self.failures

    def counterexamples(self) -> list[dict[str, object]]:
        """One self-contained dump per failing check."""
        return [
            {
                "graph6": self.graph6,
                "theorem": c.theorem,
                "detail": c.detail,
                "parameters": dict(self.parameters),
            }
            for c in self.failures
        ]

    def to_dict(self) -> dict[str, object]:
        return {
            "graph6": self.graph6,
            "incomplete": self.incomplete,
            "parameters": dict(self.parameters),
            "checks": [c.to_dict() for c in self.checks],
        }


@dataclass
class _Facts:
    g: Graph
    pre: VicinalPreorder
    dilworth: DilworthResult
    threshold: bool
    forced: frozenset[int]
    results: dict[CodeKind, SolverResult] = field(default_factory=dict)
    beta: int = 0
    beta2: int = 0
    complement_dld: int | None = None
    factors: tuple[Graph, Graph] | None = None

    def value(self, kind: CodeKind) -> int:
        return self.results[kind].value

    def witness_mask(self, kind: CodeKind) -> int:
        return self.results[kind].witness.mask


_Verdict = tuple[TheoremStatus, str]
_Check = Callable[[_Facts], _Verdict]


def _holds(ok: bool, detail: str) -> _Verdict:
    return (TheoremStatus.PASS, "") if ok else (TheoremStatus.FAIL, detail)


def _na(reason: str) -> _Verdict:
    return TheoremStatus.NOT_APPLICABLE, reason


def _code_chain(f: _Facts) -> _Verdict:
    chain = [f.value(k) for k in (CodeKind.DOM, CodeKind.LD, CodeKind.DLD, CodeKind.SLD)]
    if chain != sorted(chain):
        return _holds(False, f"gamma <= gamma_ld <= gamma_dld <= gamma_sld broken: {chain}")
    for strong, weak in (
        (CodeKind.SLD, CodeKind.DLD),
        (CodeKind.DLD, CodeKind.LD),
        (CodeKind.LD, CodeKind.DOM),
    ):
        witness = f.results[strong].witness
        if not is_code(f.g, witness, weak):
            detail = f"optimal {strong.value} code {witness.sorted()} is not {weak.value}"
            return _holds(False, detail)
    return _holds(True, "")


def _dld_upper_bound(f: _Facts) -> _Verdict:
    g = f.g
    if g.m == 0:
        return _na("graph has no edges")
    for u in range(g.n):
        if g.degree(u) == 0:
            continue
        try:
            drop_one_dld_code(g, u)
        except InvariantViolation:
            return _holds(False, f"V minus {{{u}}} is not a DLD code")
    n1 = g.n - 1
    return _holds(f.value(CodeKind.DLD) <= n1, f"gamma_dld={f.value(CodeKind.DLD)} > n-1={n1}")


def _sperner_order_bound(f: _Facts) -> _Verdict:
    g, k = f.g, f.value(CodeKind.DLD)
    capacity = sperner_capacity(k)
    if g.n > capacity:
        return _holds(False, f"n={g.n} > k + C(k, k/2) = {capacity} for k=gamma_dld={k}")
    isets = non_codeword_isets(g, f.results[CodeKind.DLD].witness)
    for u, a in isets.items():
        for v, b in isets.items():
            if u != v and a <= b:
                return _holds(False, f"I-set of {u} is contained in the I-set of {v}")
    lower = sperner_lower_bound(g.n)
    sld = f.value(CodeKind.SLD)
    return _holds(sld >= lower, f"gamma_sld={sld} < smallest feasible k={lower}")


def _ld_order_bound(f: _Facts) -> _Verdict:
    k = f.value(CodeKind.LD)
    return _holds(f.g.n <= k + 2**k - 1, f"n={f.g.n} > k + 2^k - 1 for k=gamma_ld={k}")


def _forced_codewords(f: _Facts) -> _Verdict:
    g = f.g
    if g.n == 1:
        return _holds(f.forced == {0}, f"single vertex not forced: {sorted(f.forced)}")
    oracle = frozenset(
        u for u in range(g.n) if not check_mask(g, g.full_mask & ~(1 << u), CodeKind.SLD)
    )
    if f.forced != oracle:
        return _holds(
            False, f"neighbourhood test gives {sorted(f.forced)}, drop-one test {sorted(oracle)}"
        )
    missing = [u for u in f.forced if not f.witness_mask(CodeKind.SLD) >> u & 1]
    return _holds(not missing, f"optimal SLD code misses forced codewords {sorted(missing)}")


def _vicinal_twin_lemma(f: _Facts) -> _Verdict:
    g, pre = f.g, f.pre
    if g.n < 2:
        return _na("needs n >= 2")
    for x in range(g.n):
        for y in range(x + 1, g.n):
            kind = twins(g, x, y)
            equivalent = pre.equivalent(x, y)
            if equivalent != (kind is not TwinKind.NOT_TWINS):
                return _holds(False, f"{x} ~ {y} is {equivalent} but the pair is {kind.value}")
            expected = TwinKind.TRUE_TWINS if g.has_edge(x, y) else TwinKind.FALSE_TWINS
            if equivalent and kind is not expected:
                return _holds(False, f"{x} ~ {y} should be {expected.value}, got {kind.value}")
    below = frozenset(x for x in range(g.n) if any(pre.related(x, y) for y in range(g.n) if y != x))
    return _holds(
        below == f.forced,
        f"vertices below another {sorted(below)} differ from forced codewords {sorted(f.forced)}",
    )


def _dilworth_lower_bound(f: _Facts) -> _Verdict:
    n, width, dld = f.g.n, f.dilworth.width, f.value(CodeKind.DLD)
    return _holds(n - width <= dld, f"n - dilworth = {n - width} > gamma_dld={dld}")


def _dld_antichain(f: _Facts) -> _Verdict:
    for kind in (CodeKind.DLD, CodeKind.SLD):
        outside = [u for u in range(f.g.n) if not f.witness_mask(kind) >> u & 1]
        if not f.pre.is_antichain(outside):
            return _holds(False, f"non-codewords {outside} of the {kind.value} code are comparable")
    return _holds(True, "")


def _threshold_characterization(f: _Facts) -> _Verdict:
    if f.g.m == 0:
        return _na("graph has no edges")
    at_top = f.value(CodeKind.DLD) == f.g.n - 1
    return _holds(
        at_top == f.threshold,
        f"gamma_dld = n-1 is {at_top} while threshold is {f.threshold}",
    )


def _sld_full_characterization(f: _Facts) -> _Verdict:
    if f.g.n < 2:
        return _na("needs n >= 2")
    full = f.value(CodeKind.SLD) == f.g.n
    all_twinned = all(f.pre.has_twin(x) for x in f.pre.maximal_vertices())
    return _holds(
        full == all_twinned,
        f"gamma_sld = n is {full} while every maximal vertex has a twin is {all_twinned}",
    )


def _twin_free_sld_bound(f: _Facts) -> _Verdict:
    if f.g.n < 2 or not is_twin_free(f.g):
        return _na("needs a twin-free graph on n >= 2")
    sld = f.value(CodeKind.SLD)
    return _holds(sld <= f.g.n - 1, f"twin-free but gamma_sld={sld} = n")


def _connected_hypothesis(g: Graph) -> str | None:
    if g.n < 2 or not g.is_connected():
        return "needs a connected graph on n >= 2"
    return None


def _distance3_bound(f: _Facts) -> _Verdict:
    g = f.g
    reason = _connected_hypothesis(g)
    if reason:
        return _na(reason)
    delta = g.max_degree
    limit = g.n * delta**2 // (delta**2 + 1)
    dld, spare = f.value(CodeKind.DLD), g.n - f.beta2
    if not dld <= spare <= limit:
        return _holds(False, f"gamma_dld={dld} <= n-beta2={spare} <= {limit} broken")
    try:
        greedy_3distance_code(g)
    except InvariantViolation as exc:
        return _holds(False, str(exc))
    return _holds(True, "")


def _first_covered_pair(g: Graph, closed: bool) -> tuple[int, int] | None:
    rows = g.closed_rows if closed else g.rows
    for u in range(g.n):
        for v in range(g.n):
            if u != v and g.rows[u] & ~rows[v] == 0:
                return u, v
    return None


def _independence_bound(f: _Facts, kind: CodeKind) -> _Verdict:
    g = f.g
    reason = _connected_hypothesis(g)
    if reason:
        return _na(reason)
    closed = kind is CodeKind.SLD
    pair = _first_covered_pair(g, closed)
    if pair is not None:
        target = "N[v]" if closed else "N(v)"
        return _na(f"N(u) is contained in {target} for (u, v) = {pair}")
    limit = g.n * g.max_degree // (g.max_degree + 1)
    value, spare = f.value(kind), g.n - f.beta
    return _holds(
        value <= spare <= limit,
        f"gamma_{kind.value.lower()}={value} <= n-beta={spare} <= {limit} broken",
    )


def _independence_dld_bound(f: _Facts) -> _Verdict:
    return _independence_bound(f, CodeKind.DLD)


def _independence_sld_bound(f: _Facts) -> _Verdict:
    return _independence_bound(f, CodeKind.SLD)


def _complement_dld(f: _Facts) -> _Verdict:
    g = f.g
    if g.n < 2:
        return _na("needs n >= 2")
    if f.complement_dld is None:
        return _na("complement not solved")
    gap = abs(f.value(CodeKind.DLD) - f.complement_dld)
    extreme = g.m in (0, g.n * (g.n - 1) // 2)
    if gap > 1:
        return _holds(False, f"|gamma_dld(G) - gamma_dld(complement)| = {gap} > 1")
    return _holds(
        (gap == 1) == extreme,
        f"gap={gap} but complete-or-discrete is {extreme}",
    )


def _sld_is_two_dominating(f: _Facts) -> _Verdict:
    if not check_mask(f.g, f.witness_mask(CodeKind.SLD), CodeKind.DOM2):
        return _holds(False, "optimal SLD code is not 2-dominating")
    sld, dom2 = f.value(CodeKind.SLD), f.value(CodeKind.DOM2)
    return _holds(dom2 <= sld, f"gamma_2={dom2} > gamma_sld={sld}")


def _girth_five_sld(f: _Facts) -> _Verdict:
    cycle = girth(f.g)
    if cycle < 5:
        return _na(f"girth {cycle} < 5")
    sld, dom2 = f.value(CodeKind.SLD), f.value(CodeKind.DOM2)
    return _holds(sld == dom2, f"girth >= 5 but gamma_sld={sld} != gamma_2={dom2}")


def _tree_dld_independence(f: _Facts) -> _Verdict:
    if not f.g.is_tree():
        return _na("not a tree")
    linear, dld = tree_gamma_dld(f.g).value, f.value(CodeKind.DLD)
    if not linear == dld == f.beta:
        return _holds(False, f"tree pruning {linear}, exact {dld}, beta {f.beta} differ")
    bound = leaf_support_bound(f.g)
    return _holds(bound <= dld, f"leaf/support bound {bound} > gamma_dld={dld}")


def _tree_sld_two_domination(f: _Facts) -> _Verdict:
    if not f.g.is_tree():
        return _na("not a tree")
    linear = tree_gamma_sld(f.g).value
    sld, dom2 = f.value(CodeKind.SLD), f.value(CodeKind.DOM2)
    detail = f"tree program {linear}, exact {sld}, gamma_2 {dom2} differ"
    return _holds(linear == sld == dom2, detail)


def _solver_oracle_agreement(f: _Facts) -> _Verdict:
    if f.g.n > ORACLE_LIMIT:
        return _na(f"oracle runs only for n <= {ORACLE_LIMIT}")
    for kind, result in f.results.items():
        oracle = minimum_code(f.g, kind, method=SolverMethod.EXHAUSTIVE)
        if (oracle.value, oracle.witness) != (result.value, result.witness):
            return _holds(
                False,
                f"{kind.value}: branch and bound {result.value} {result.witness.sorted()}, "
                f"exhaustive {oracle.value} {oracle.witness.sorted()}",
            )
    return _holds(True, "")


def _product_bounds(f: _Facts) -> _Verdict:
    if f.factors is None:
        return _na("graph not presented as a product")
    g, h = f.factors
    for kind in (CodeKind.SLD, CodeKind.DLD):
        vg, vh = minimum_code(g, kind).value, minimum_code(h, kind).value
        value = f.value(kind)
        low, high = max(vg, vh), min(h.n * vg, g.n * vh)
        if not low <= value <= high:
            return _holds(
                False, f"{kind.value}: {low} <= gamma(G x H)={value} <= {high} broken"
            )
    return _holds(True, "")


# (theorem id, needs exact solver values, check)
THEOREMS: tuple[tuple[str, bool, _Check], ...] = (
    ("code_chain", True, _code_chain),
    ("dld_upper_bound", True, _dld_upper_bound),
    ("sperner_order_bound", True, _sperner_order_bound),
    ("ld_order_bound", True, _ld_order_bound),
    ("forced_codewords", True, _forced_codewords),
    ("vicinal_twin_lemma", False, _vicinal_twin_lemma),
    ("dilworth_lower_bound", True, _dilworth_lower_bound),
    ("dld_antichain", True, _dld_antichain),
    ("threshold_characterization", True, _threshold_characterization),
    ("sld_full_characterization", True, _sld_full_characterization),
    ("twin_free_sld_bound", True, _twin_free_sld_bound),
    ("distance3_bound", True, _distance3_bound),
    ("independence_dld_bound", True, _independence_dld_bound),
    ("independence_sld_bound", True, _independence_sld_bound),
    ("complement_dld", True, _complement_dld),
    ("sld_is_two_dominating", True, _sld_is_two_dominating),
    ("girth_five_sld", True, _girth_five_sld),
    ("tree_dld_independence", True, _tree_dld_independence),
    ("tree_sld_two_domination", True, _tree_sld_two_domination),
    ("solver_oracle_agreement", True, _solver_oracle_agreement),
    ("product_bounds", True, _product_bounds),
)

THEOREM_IDS: tuple[str, ...] = tuple(name for name, _, _ in THEOREMS)


def _solve(f: _Facts, settings: SolverSettings, include_complement: bool) -> None:
    g = f.g
    enforce_cap(g, settings)
    known: dict[CodeKind, int] = {}
    for kind in _SOLVE_ORDER:
        f.results[kind] = minimum_code(g, kind, settings=settings, known=known)
        known[kind] = f.results[kind].value
    f.beta = independence_number(g, settings).value
    f.beta2 = distance3_independence_number(g, settings).value
    if include_complement and g.n >= 2:
        f.complement_dld = minimum_code(complement(g), CodeKind.DLD, settings=settings).value


def _parameters(f: _Facts) -> dict[str, object]:
    g = f.g
    cycle = girth(g)
    params: dict[str, object] = {
        "n": g.n,
        "m": g.m,
        "max_degree": g.max_degree,
        "girth": None if math.isinf(cycle) else int(cycle),
        "dilworth": f.dilworth.width,
        "threshold": f.threshold,
        "twin_free": is_twin_free(g),
        "forced": len(f.forced),
    }
    if f.results:
        params.update(
            {
                "beta": f.beta,
                "beta2": f.beta2,
                "gamma2": f.value(CodeKind.DOM2),
                "gamma": f.value(CodeKind.DOM),
                "gamma_ld": f.value(CodeKind.LD),
                "gamma_dld": f.value(CodeKind.DLD),
                "gamma_sld": f.value(CodeKind.SLD),
            }
        )
        if f.complement_dld is not None:
            params["gamma_dld_complement"] = f.complement_dld
    if g.is_tree():
        params["leaves"] = leaf_count(g)
        params["supports"] = len(support_vertices(g))
    return params


def _gather(
    g: Graph,
    settings: SolverSettings | None,
    include_complement: bool,
    factors: tuple[Graph, Graph] | None = None,
) -> tuple[_Facts, bool]:
    pre = vicinal_preorder(g)
    facts = _Facts(
        g=g,
        pre=pre,
        dilworth=dilworth_decomposition(g, pre),
        threshold=is_threshold(g),
        forced=forced_sld_codewords(g),
        factors=factors,
    )
    try:
        _solve(facts, settings or SolverSettings(), include_complement)
    except SolverCapExceeded as exc:
        logger.warning("n=%d: %s; solver values omitted", g.n, exc)
        facts.results.clear()
        return facts, True
    return facts, False


def graph_parameters(
    g: Graph, *, settings: SolverSettings | None = None, include_complement: bool = True
) -> dict[str, object]:
    """The parameter table of *g* without running any check."""
    facts, _ = _gather(g, settings, include_complement)
    return _parameters(facts)


def check_graph(
    g: Graph,
    *,
    settings: SolverSettings | None = None,
    include_complement: bool = True,
    factors: tuple[Graph, Graph] | None = None,
) -> TheoremReport:
    """Run every theorem check on *g*.

    Args:
        g: Graph to check.
        settings: Exactness cap for the solvers.
        include_complement: Also solve the complement for ``complement_dld``.
        factors: ``(G, H)`` when *g* is ``G □ H``; enables ``product_bounds``.
    """
    graph6 = graph_key(g)
    facts, incomplete = _gather(g, settings, include_complement, factors)
    report = TheoremReport(graph6=graph6, parameters=_parameters(facts), incomplete=incomplete)
    for name, needs_solver, check in THEOREMS:
        if needs_solver and incomplete:
            status, detail = _na("skipped: n above the exactness cap")
        else:
            status, detail = check(facts)
        report.checks.append(TheoremCheck(name, status, detail))
        if status is TheoremStatus.FAIL:
            THEOREM_FAILURES.labels(theorem=name).inc()
            logger.error("theorem %s failed on %s: %s", name, graph6, detail)
    GRAPHS_CHECKED.inc()
    return report


def check_product(
    g: Graph,
    h: Graph,
    *,
    settings: SolverSettings | None = None,
    include_complement: bool = True,
) -> TheoremReport:
    """:func:`check_graph` on ``G □ H`` with the product sandwiches enabled."""
    return check_graph(
        cartesian_product(g, h),
        settings=settings,
        include_complement=include_complement,
        factors=(g, h),
    )
