# SPDX-License-Identifier: MPL-2.0
"""Exact minimum codes and the auxiliary parameters β, β₂ and γ₂.

``minimum_code`` has two methods:

* ``exhaustive`` tries every subset by increasing size in lexicographic
  order, with no bounds and no forced codewords. It is the oracle.
* ``branch_and_bound`` decides vertices in descending-degree order
  (include before exclude), pre-includes forced codewords and prunes with
  the order bounds from :mod:`locdom.engine.order` plus partial I-set
  conflicts. Once the optimum is fixed a second, index-ordered pass bounded
  at that value returns the lexicographically smallest optimal code, so both
  methods report the same witness.
"""

from __future__ import annotations

import math
import time
from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

import networkx as nx

from locdom.engine.codes import Code, CodeKind, check_mask, forced_sld_codewords
from locdom.engine.graph import Graph, bits, complement, mask_of, square
from locdom.engine.order import dilworth_number, ld_lower_bound, sperner_lower_bound
from locdom.engine.schema import SolverSettings
from locdom.engine.telemetry import SOLVE_LATENCY_MS, SOLVER_NODES
from locdom.exceptions import DomainError, InvariantViolation, SolverCapExceeded
from locdom.logging_config import configure_logger

logger = configure_logger(__name__)


class SolverMethod(str, Enum):
    EXHAUSTIVE = "exhaustive"
    BRANCH_AND_BOUND = "branch_and_bound"
    TREE_LINEAR = "tree_linear"
    CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class SolverResult:
    """Optimal value, one witness and search statistics."""

    value: int
    witness: Code
    nodes_explored: int
    lower_bound_used: int
    method: SolverMethod

    def to_dict(self) -> dict[str, object]:
        return {
            "value": self.value,
            "witness": self.witness.sorted(),
            "method": self.method.value,
            "nodes_explored": self.nodes_explored,
            "lower_bound_used": self.lower_bound_used,
        }


# every code of the key kind is also a code of each listed kind
_WEAKER: dict[CodeKind, tuple[CodeKind, ...]] = {
    CodeKind.DOM: (),
    CodeKind.DOM2: (CodeKind.DOM,),
    CodeKind.LD: (CodeKind.DOM,),
    CodeKind.DLD: (CodeKind.LD, CodeKind.DOM),
    CodeKind.SLD: (CodeKind.DLD, CodeKind.LD, CodeKind.DOM2, CodeKind.DOM),
}


def enforce_cap(g: Graph, settings: SolverSettings) -> None:
    if g.n > settings.exactness_cap and not settings.allow_over_cap:
        logger.warning("refusing exact search on n=%d (cap %d)", g.n, settings.exactness_cap)
        raise SolverCapExceeded(g.n, settings.exactness_cap)


def forced_mask(g: Graph, kind: CodeKind) -> int:
    """Vertices every code of *kind* must contain."""
    mask = mask_of(g.isolated_vertices())
    if kind is CodeKind.DOM2:
        mask |= mask_of(u for u in range(g.n) if g.rows[u].bit_count() < 2)
    elif kind is CodeKind.SLD:
        mask |= mask_of(forced_sld_codewords(g))
    return mask


def lower_bound(g: Graph, kind: CodeKind, known: Mapping[CodeKind, int] | None = None) -> int:
    """Best static lower bound on the size of a code of *kind*."""
    kind = CodeKind(kind)
    bound = max(1, forced_mask(g, kind).bit_count())
    if kind is CodeKind.LD:
        bound = max(bound, ld_lower_bound(g.n))
    elif kind in (CodeKind.DLD, CodeKind.SLD):
        bound = max(bound, sperner_lower_bound(g.n), g.n - dilworth_number(g))
    for weaker in _WEAKER[kind]:
        if known and weaker in known:
            bound = max(bound, known[weaker])
    return min(bound, g.n)


class _CodeSearch:
    """Include/exclude depth-first search for codes smaller than ``bound``."""

    def __init__(self, g: Graph, kind: CodeKind, forced: int, lower: int, order: list[int]):
        self.g = g
        self.kind = kind
        self.forced = forced
        self.lower = lower
        self.order = order
        self.nodes = 0
        self.bound = g.n + 1
        self.best: int | None = None
        self._suffix = [0] * (len(order) + 1)
        for i in range(len(order) - 1, -1, -1):
            self._suffix[i] = self._suffix[i + 1] | (1 << order[i])
        self._twice = kind in (CodeKind.DOM2, CodeKind.SLD)
        self._reach = g.max_degree + 1

    def run(self, bound: int, *, first_only: bool) -> int | None:
        self.bound = bound
        self._dfs(0, self.forced, 0, self.forced.bit_count(), first_only)
        return self.best

    def _dfs(self, idx: int, inc: int, exc: int, size: int, first_only: bool) -> bool:
        self.nodes += 1
        if size >= self.bound:
            return False
        undecided = self._suffix[idx]
        if size + (len(self.order) - idx) < self.lower:
            return False
        if self._dead(inc, exc, undecided):
            return False
        uncovered = sum(1 for u in bits(exc) if not self.g.closed_rows[u] & inc)
        if size + math.ceil(uncovered / self._reach) >= self.bound:
            return False
        if idx == len(self.order):
            if inc and check_mask(self.g, inc, self.kind):
                self.best, self.bound = inc, size
                return first_only
            return False
        v = self.order[idx]
        if self._dfs(idx + 1, inc | (1 << v), exc, size + 1, first_only):
            return True
        if self.bound <= self.lower:
            return True
        return self._dfs(idx + 1, inc, exc | (1 << v), size, first_only)

    def _dead(self, inc: int, exc: int, undecided: int) -> bool:
        g = self.g
        avail = inc | undecided
        for u in bits(exc):
            if self._twice:
                if (g.rows[u] & avail).bit_count() < 2:
                    return True
            elif not g.closed_rows[u] & avail:
                return True
        if self.kind not in (CodeKind.LD, CodeKind.DLD, CodeKind.SLD):
            return False

        settled = [u for u in bits(exc) if not g.closed_rows[u] & undecided]
        if not settled:
            return False
        isets = {u: g.closed_rows[u] & inc for u in settled}
        if self.kind is CodeKind.LD:
            return len(set(isets.values())) < len(isets)
        if self.kind is CodeKind.DLD:
            return any(u != v and a & ~b == 0 for u, a in isets.items() for v, b in isets.items())
        decided = [v for v in range(g.n) if not g.closed_rows[v] & undecided]
        for u, a in isets.items():
            for v in decided:
                if v != u and a & ~(g.closed_rows[v] & inc) == 0:
                    return True
        return False


def _exhaustive(g: Graph, kind: CodeKind) -> SolverResult:
    nodes = 0
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            nodes += 1
            mask = mask_of(combo)
            if check_mask(g, mask, kind):
                return SolverResult(size, Code.of(combo), nodes, 1, SolverMethod.EXHAUSTIVE)
    raise InvariantViolation("no code found, not even V", {"n": g.n, "kind": kind.value})


def _branch_and_bound(
    g: Graph, kind: CodeKind, known: Mapping[CodeKind, int] | None
) -> SolverResult:
    lower = lower_bound(g, kind, known)
    forced = forced_mask(g, kind)
    free = [v for v in range(g.n) if not forced >> v & 1]

    search = _CodeSearch(g, kind, forced, lower, sorted(free, key=lambda v: (-g.degree(v), v)))
    found = search.run(g.n, first_only=False) if lower < g.n else None
    value = found.bit_count() if found is not None else g.n

    canonical = _CodeSearch(g, kind, forced, value, free)
    witness = canonical.run(value + 1, first_only=True)
    if witness is None or witness.bit_count() != value:
        raise InvariantViolation(
            "canonical pass missed the optimum", {"kind": kind.value, "value": value}
        )
    return SolverResult(
        value=value,
        witness=Code.from_mask(witness),
        nodes_explored=search.nodes + canonical.nodes,
        lower_bound_used=lower,
        method=SolverMethod.BRANCH_AND_BOUND,
    )


def minimum_code(
    g: Graph,
    kind: CodeKind,
    *,
    method: SolverMethod = SolverMethod.BRANCH_AND_BOUND,
    settings: SolverSettings | None = None,
    known: Mapping[CodeKind, int] | None = None,
) -> SolverResult:
    """Exact minimum size of a code of *kind* on *g* with the lex-smallest witness.

    Args:
        g: Graph to solve.
        kind: Property the code must have.
        method: ``exhaustive`` (oracle) or ``branch_and_bound``.
        settings: Exactness cap; defaults to :class:`SolverSettings`.
        known: Already computed optima of other kinds on the same graph. Values
            for weaker kinds raise the starting lower bound.

    Raises:
        SolverCapExceeded: ``g.n`` exceeds the cap and no override is set.
    """
    kind = CodeKind(kind)
    method = SolverMethod(method)
    enforce_cap(g, settings or SolverSettings())
    started = time.perf_counter()
    if method is SolverMethod.EXHAUSTIVE:
        result = _exhaustive(g, kind)
    elif method is SolverMethod.BRANCH_AND_BOUND:
        result = _branch_and_bound(g, kind, known)
    else:
        raise DomainError(f"minimum_code does not run method {method.value!r}")

    if not check_mask(g, result.witness.mask, kind):
        raise InvariantViolation(
            "solver witness fails its own property",
            {"kind": kind.value, "witness": result.witness.sorted()},
        )
    elapsed_ms = (time.perf_counter() - started) * 1000
    SOLVE_LATENCY_MS.labels(kind=kind.value).observe(elapsed_ms)
    SOLVER_NODES.labels(kind=kind.value, method=method.value).observe(result.nodes_explored)
    logger.debug(
        "solved %s on n=%d via %s: value=%d nodes=%d (%.1f ms)",
        kind.value,
        g.n,
        method.value,
        result.value,
        result.nodes_explored,
        elapsed_ms,
    )
    return result


def independence_number(g: Graph, settings: SolverSettings | None = None) -> SolverResult:
    """β(G) via an exact maximum clique of the complement."""
    enforce_cap(g, settings or SolverSettings())
    members = _maximum_independent_set(g)
    return SolverResult(len(members), Code.of(members), 0, 1, SolverMethod.BRANCH_AND_BOUND)


def _maximum_independent_set(g: Graph) -> list[int]:
    clique, _ = nx.max_weight_clique(complement(g).to_networkx(), weight=None)
    return sorted(clique)


def distance3_independence_number(g: Graph, settings: SolverSettings | None = None) -> SolverResult:
    """β₂(G): largest vertex set with pairwise distances at least three."""
    enforce_cap(g, settings or SolverSettings())
    members = _maximum_independent_set(square(g))
    return SolverResult(len(members), Code.of(members), 0, 1, SolverMethod.BRANCH_AND_BOUND)


def two_domination_number(
    g: Graph,
    settings: SolverSettings | None = None,
    known: Mapping[CodeKind, int] | None = None,
) -> SolverResult:
    """γ₂(G): every vertex outside the set has two neighbours inside it."""
    return minimum_code(g, CodeKind.DOM2, settings=settings, known=known)


def greedy_3distance_code(g: Graph) -> Code:
    """``V \\ S`` for a greedily built 3-distance-independent set ``S``.

    ``S`` takes the smallest remaining vertex ``u`` and discards every vertex
    within distance two of it. The complement is a DLD code of size at most
    ``n(1 - 1/(Δ²+1))``.
    """
    if g.n < 2 or not g.is_connected():
        raise DomainError("greedy 3-distance code needs a connected graph on at least two vertices")
    remaining = g.full_mask
    chosen = 0
    while remaining:
        u = (remaining & -remaining).bit_length() - 1
        chosen |= 1 << u
        for v in bits(g.rows[u]):
            remaining &= ~g.closed_rows[v]
    code = Code.from_mask(g.full_mask & ~chosen)
    limit = g.n * g.max_degree**2 // (g.max_degree**2 + 1)
    if not check_mask(g, code.mask, CodeKind.DLD) or len(code) > limit:
        raise InvariantViolation(
            "greedy 3-distance code broke its guarantee",
            {"code": code.sorted(), "limit": limit},
        )
    return code
