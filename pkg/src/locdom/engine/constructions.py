# SPDX-License-Identifier: MPL-2.0
"""Deterministic generators for the extremal and realization graphs.

Every generator returns a :class:`ConstructionClaim`: the graph plus the
parameter values its construction is supposed to attain. The generators
never check their own claims; :func:`verify_claim` runs the exact solvers.

Vertex numbering follows the constructions: the ``K`` block (``v1..va``)
first, then the ``P`` block (``u1..``). Wherever a construction leaves the
choice of a "proper non-empty subset" open, subsets of ``K`` are taken in
size-then-lexicographic order, skipping neighbourhoods already used.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb

from locdom.engine.codes import CodeKind
from locdom.engine.graph import Graph, complement
from locdom.engine.graph6 import graph_key
from locdom.engine.order import sperner_capacity
from locdom.engine.schema import SolverSettings
from locdom.engine.solvers import minimum_code
from locdom.exceptions import DomainError, InfeasibleParametersError, UnsupportedSizeError
from locdom.logging_config import configure_logger

logger = configure_logger(__name__)

MAX_ORDER = 4096


class ClaimParameter(str, Enum):
    N = "n"
    GAMMA_LD = "gamma_ld"
    GAMMA_SLD = "gamma_sld"
    GAMMA_DLD = "gamma_dld"


_KIND_OF = {
    ClaimParameter.GAMMA_LD: CodeKind.LD,
    ClaimParameter.GAMMA_SLD: CodeKind.SLD,
    ClaimParameter.GAMMA_DLD: CodeKind.DLD,
}


@dataclass(frozen=True)
class ConstructionClaim:
    name: str
    graph: Graph
    claims: tuple[tuple[ClaimParameter, int], ...]

    def claimed(self, parameter: ClaimParameter) -> int | None:
        return dict(self.claims).get(parameter)

    def to_dict(self) -> dict[str, object]:
        return {
            "name": self.name,
            "graph6": graph_key(self.graph),
            "n": self.graph.n,
            "claims": {p.value: v for p, v in self.claims},
        }


@dataclass(frozen=True)
class ClaimVerification:
    claim: ConstructionClaim
    results: tuple[tuple[ClaimParameter, int, int], ...]

    @property
    def ok(self) -> bool:
        return all(claimed == computed for _, claimed, computed in self.results)

    def to_dict(self) -> dict[str, object]:
        return {
            "name": self.claim.name,
            "ok": self.ok,
            "parameters": {
                p.value: {"claimed": claimed, "computed": computed}
                for p, claimed, computed in self.results
            },
        }


def verify_claim(
    claim: ConstructionClaim, settings: SolverSettings | None = None
) -> ClaimVerification:
    """Compute every claimed parameter with the exact solvers."""
    results = []
    known: dict[CodeKind, int] = {}
    for parameter, value in claim.claims:
        if parameter is ClaimParameter.N:
            computed = claim.graph.n
        else:
            kind = _KIND_OF[parameter]
            computed = minimum_code(claim.graph, kind, settings=settings, known=known).value
            known[kind] = computed
        results.append((parameter, value, computed))
        if value != computed:
            logger.error(
                "%s: claimed %s=%d but solver found %d",
                claim.name,
                parameter.value,
                value,
                computed,
            )
    return ClaimVerification(claim, tuple(results))


def _labels(a: int, p: int) -> list[str]:
    return [f"v{i}" for i in range(1, a + 1)] + [f"u{i}" for i in range(1, p + 1)]


def _require_order(name: str, n: int) -> None:
    if n > MAX_ORDER:
        raise UnsupportedSizeError(
            f"{name} would have {n} vertices, above the construction limit of {MAX_ORDER}"
        )


def _subsets_by_size(k: int, sizes: Iterable[int]) -> Iterator[frozenset[int]]:
    for size in sizes:
        for subset in combinations(range(k), size):
            yield frozenset(subset)


def sperner_extremal(k: int) -> ConstructionClaim:
    """Bipartite graph on ``U`` (k vertices) and one vertex per middle-layer subset.

    ``v_i`` is adjacent to the ``i``-th ``⌈k/2⌉``-subset of ``U`` in
    lexicographic order. ``U`` is a DLD code with k codewords and the order
    meets the Sperner capacity; for ``k >= 3`` it is also an SLD code.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    n = sperner_capacity(k)
    _require_order(f"sperner-extremal({k})", n)
    layer = list(combinations(range(k), (k + 1) // 2))
    edges = [(u, k + i) for i, subset in enumerate(layer) for u in subset]
    labels = [f"u{i}" for i in range(1, k + 1)] + [f"v{i}" for i in range(1, len(layer) + 1)]
    claims = [(ClaimParameter.N, n), (ClaimParameter.GAMMA_DLD, k)]
    if k >= 3:
        claims.append((ClaimParameter.GAMMA_SLD, k))
    graph = Graph.from_edges(n, edges, labels)
    return ConstructionClaim(f"sperner-extremal({k})", graph, tuple(claims))


def complement_gap(k: int) -> tuple[ConstructionClaim, ConstructionClaim]:
    """``G'`` = Sperner extremal graph with ``U`` made a clique, and its complement."""
    if k < 4:
        raise DomainError(f"complement gap needs k >= 4, got {k}")
    base = sperner_extremal(k).graph
    clique = list(combinations(range(k), 2))
    g = Graph.from_edges(base.n, base.edges() + clique, base.labels)
    middle = comb(k, k // 2)
    first = ConstructionClaim(
        f"complement-gap({k})",
        g,
        ((ClaimParameter.N, g.n), (ClaimParameter.GAMMA_SLD, middle)),
    )
    second = ConstructionClaim(
        f"complement-gap({k})-complement",
        complement(g),
        ((ClaimParameter.N, g.n), (ClaimParameter.GAMMA_SLD, k)),
    )
    return first, second


# Hand-wired a = 2 graphs: {0, 1} is an optimal LD code in both.
_LD_SLD_SMALL = {
    (2, 4): [(0, 1), (0, 2), (0, 4), (1, 3), (1, 4), (2, 4)],
    (2, 5): [(0, 1), (0, 2), (0, 4), (1, 3), (1, 4), (2, 4), (2, 3)],
}


def _ld_sld_claims(a: int, b: int) -> tuple[tuple[ClaimParameter, int], ...]:
    return ((ClaimParameter.GAMMA_LD, a), (ClaimParameter.GAMMA_SLD, b))


def realize_ld_sld(a: int, b: int) -> ConstructionClaim:
    """A graph with ``γ^LD = a`` and ``γ^SLD = b``; exists iff ``0 <= b-a <= 2^a - 1``."""
    if a < 1 or not 0 <= b - a <= 2**a - 1:
        raise InfeasibleParametersError(
            f"no graph has (gamma_ld, gamma_sld) = ({a}, {b}): need a >= 1 and 0 <= b-a <= 2^a-1"
        )
    name = f"realize-ld-sld({a},{b})"
    _require_order(name, b + 1)
    d = b - a
    if d == 0:
        return ConstructionClaim(name, Graph.empty(a), _ld_sld_claims(a, b))
    if d == 1:
        return ConstructionClaim(name, Graph.from_edges(b, [(0, 1)]), _ld_sld_claims(a, b))
    if a == 2:
        graph = Graph.from_edges(5, _LD_SLD_SMALL[(a, b)], _labels(2, 3))
        return ConstructionClaim(name, graph, _ld_sld_claims(a, b))
    if d <= 2**a - 2:
        return ConstructionClaim(name, _ld_sld_middle(a, b), _ld_sld_claims(a, b))
    return ConstructionClaim(name, _ld_sld_extremal(a), _ld_sld_claims(a, b))


def _ld_sld_middle(a: int, b: int) -> Graph:
    """``2 <= b-a <= 2^a - 2``: ``K`` of size k, spare ``K'``, and ``P`` with ``|V| = b + 1``."""
    d = b - a
    k = 1
    while not 2 ** (k - 1) - 2 < d <= 2**k - 2:
        k += 1
    p = d + 1
    u = [a + i for i in range(p)]  # u[0] is u1
    edges: list[tuple[int, int]] = []
    # u1 sees every other vertex
    edges += [(u[0], v) for v in range(a)]
    edges += [(u[0], w) for w in u[1:]]
    used = set()
    # u2..u_{k+1} take the singletons of K
    for i in range(1, min(k, p - 1) + 1):
        edges.append((u[i], i - 1))
        used.add(frozenset({i - 1}))
    pool = (s for s in _subsets_by_size(k, range(1, k)) if s not in used)
    for w in u[k + 1 :]:
        edges += [(w, v) for v in sorted(next(pool))]
    return Graph.from_edges(b + 1, edges, _labels(a, p))


def _ld_sld_extremal(a: int) -> Graph:
    """``b - a = 2^a - 1``: ``K`` of size a and ``P`` with ``2^a - 1`` vertices."""
    p = 2**a - 1
    u = [a + i for i in range(p)]
    nbhd: dict[int, frozenset[int]] = {u[0]: frozenset(range(a))}
    edges: list[tuple[int, int]] = []
    # v1 sees every other K vertex
    edges += [(0, i) for i in range(1, a)]
    for i in range(1, a):
        nbhd[u[i]] = frozenset({0, i})
    used = set(nbhd.values())
    pool = (s for s in _subsets_by_size(a, range(1, a + 1)) if s not in used)
    for w in u[a:]:
        nbhd[w] = next(pool)
    for w, subset in nbhd.items():
        edges += [(w, v) for v in sorted(subset)]
    # u1 sees every u whose K-neighbourhood contains v1
    edges += [(u[0], w) for w in u[1:] if 0 in nbhd[w]]
    # u_i (i = 2..a) sees every later u whose K-neighbourhood contains v_i
    for i in range(1, a):
        edges += [(u[i], w) for w in u[a:] if i in nbhd[w]]
    return Graph.from_edges(a + p, edges, _labels(a, p))


def realize_ld_dld(a: int, b: int) -> ConstructionClaim:
    """A graph with ``γ^LD = a`` and ``γ^DLD = b``.

    Exists iff ``0 <= b-a <= 2^a - 1 - C(a, ⌈a/2⌉)``.
    """
    if a < 1 or not 0 <= b - a <= 2**a - 1 - comb(a, (a + 1) // 2):
        raise InfeasibleParametersError(
            f"no graph has (gamma_ld, gamma_dld) = ({a}, {b}): "
            "need a >= 1 and 0 <= b-a <= 2^a-1-C(a, ceil(a/2))"
        )
    name = f"realize-ld-dld({a},{b})"
    _require_order(name, a + 1)
    claims = ((ClaimParameter.GAMMA_LD, a), (ClaimParameter.GAMMA_DLD, b))
    if a == b:
        star = Graph.from_edges(a + 1, [(0, i) for i in range(1, a + 1)])
        return ConstructionClaim(name, star, claims)

    d = b - a
    k = 2
    while not _dld_room(k - 1) < d <= _dld_room(k):
        k += 1
    middle = comb(k, (k + 1) // 2)
    p = d + middle
    _require_order(name, a + p)
    u = [a + i for i in range(p)]
    edges = list(combinations(range(a), 2))
    edges += [(u[0], v) for v in range(a)]
    used = {frozenset(range(k))}
    assigned: list[frozenset[int]] = []
    assigned += [frozenset(s) for s in combinations(range(k), k // 2)]
    if k >= 4:
        assigned += [frozenset({j}) for j in range(k)]
    used |= set(assigned)
    rest = (s for s in _subsets_by_size(k, range(1, k)) if s not in used)
    while len(assigned) < p - 1:
        assigned.append(next(rest))
    for w, subset in zip(u[1:], assigned):
        edges += [(w, v) for v in sorted(subset)]
    return ConstructionClaim(name, Graph.from_edges(a + p, edges, _labels(a, p)), claims)


def _dld_room(k: int) -> int:
    """``2^k - 1 - C(k, ⌈k/2⌉)``: the largest ``b - a`` reachable with k."""
    return 2**k - 1 - comb(k, (k + 1) // 2)
