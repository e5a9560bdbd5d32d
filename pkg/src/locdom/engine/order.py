# SPDX-License-Identifier: MPL-2.0
"""Vicinal preorder, twins, Dilworth number, threshold recognition and
Sperner-bound arithmetic.

``x ≲ y`` iff ``N(x) ⊆ N[y]``. The relation is collapsed to its ∼-classes
(strongly connected components of the relation digraph) and the width of
the resulting poset is obtained from a maximum bipartite matching: a
minimum chain cover has ``#classes - |matching|`` chains.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import networkx as nx
import numpy as np

from locdom.engine.families import ThresholdStep
from locdom.engine.graph import Graph, bits
from locdom.exceptions import CapacityOverflowError, DomainError, InvariantViolation
from locdom.logging_config import configure_logger

logger = configure_logger(__name__)

INT64_MAX = 2**63 - 1


class TwinKind(str, Enum):
    TRUE_TWINS = "true_twins"
    FALSE_TWINS = "false_twins"
    NOT_TWINS = "not_twins"


@dataclass(frozen=True, eq=False)
class VicinalPreorder:
    """The relation matrix plus its equivalence classes.

    Attributes:
        leq: ``leq[x, y]`` is ``N(x) ⊆ N[y]``.
        classes: ∼-classes, each sorted, ordered by smallest member.
        class_of: index into ``classes`` for every vertex.
    """

    leq: np.ndarray
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    @property
    def n(self) -> int:
        return int(self.leq.shape[0])

    def related(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y])

    def equivalent(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y] and self.leq[y, x])

    def strictly_below(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y] and not self.leq[y, x])

    def is_chain(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.leq[x, y] or self.leq[y, x] for x in vs for y in vs)

    def is_antichain(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(x == y or not self.leq[x, y] for x in vs for y in vs)

    def is_total(self) -> bool:
        return bool((self.leq | self.leq.T).all())

    def maximal_vertices(self) -> list[int]:
        """Vertices with nothing strictly above them."""
        strict = self.leq & ~self.leq.T
        return [int(x) for x in np.flatnonzero(~strict.any(axis=1))]

    def has_twin(self, x: int) -> bool:
        return len(self.classes[self.class_of[x]]) > 1

    @cached_property
    def quotient(self) -> nx.DiGraph:
        """Strict order between classes as a DAG on class indices."""
        dag = nx.DiGraph()
        dag.add_nodes_from(range(len(self.classes)))
        reps = [cls[0] for cls in self.classes]
        for i, x in enumerate(reps):
            for j, y in enumerate(reps):
                if i != j and self.leq[x, y]:
                    dag.add_edge(i, j)
        return dag


def vicinal_preorder(g: Graph, *, verify: bool = False) -> VicinalPreorder:
    """Compute ``≲`` for *g*; *verify* (or DEBUG logging) re-checks transitivity."""
    adj = g.adjacency_matrix()
    closed = adj | np.eye(g.n, dtype=bool)
    # leq[x, y] = no z with z ∈ N(x) and z ∉ N[y]
    leq = ~(adj[:, None, :] & ~closed[None, :, :]).any(axis=2)
    leq.setflags(write=False)

    if verify or logger.isEnabledFor(logging.DEBUG):
        composed = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
        if (composed & ~leq).any():
            raise InvariantViolation("vicinal preorder is not transitive", {"n": g.n})

    relation = nx.DiGraph()
    relation.add_nodes_from(range(g.n))
    relation.add_edges_from((int(x), int(y)) for x, y in zip(*np.nonzero(leq)) if x != y)
    components = sorted(
        (tuple(sorted(c)) for c in nx.strongly_connected_components(relation)),
        key=lambda c: c[0],
    )
    class_of = [0] * g.n
    for idx, comp in enumerate(components):
        for v in comp:
            class_of[v] = idx
    return VicinalPreorder(leq=leq, classes=tuple(components), class_of=tuple(class_of))


def twins(g: Graph, u: int, v: int) -> TwinKind:
    if u == v:
        raise DomainError("twins are defined for distinct vertices")
    if g.closed_mask(u) == g.closed_mask(v):
        return TwinKind.TRUE_TWINS
    if g.open_mask(u) == g.open_mask(v):
        return TwinKind.FALSE_TWINS
    return TwinKind.NOT_TWINS


def is_twin_free(g: Graph) -> bool:
    return len(set(g.rows)) == g.n and len(set(g.closed_rows)) == g.n


@dataclass(frozen=True)
class DilworthResult:
    """Width of the vicinal preorder with both extremal witnesses."""

    width: int
    antichain: tuple[int, ...]
    chains: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict[str, object]:
        return {
            "width": self.width,
            "antichain": list(self.antichain),
            "chains": [list(c) for c in self.chains],
        }


def dilworth_decomposition(g: Graph, preorder: VicinalPreorder | None = None) -> DilworthResult:
    """Minimum chain cover and maximum antichain of the vicinal preorder."""
    pre = preorder if preorder is not None else vicinal_preorder(g)
    dag = pre.quotient
    k = len(pre.classes)

    split = nx.Graph()
    top = [("L", i) for i in range(k)]
    split.add_nodes_from(top, bipartite=0)
    split.add_nodes_from((("R", i) for i in range(k)), bipartite=1)
    split.add_edges_from((("L", i), ("R", j)) for i, j in dag.edges())
    matching = nx.bipartite.hopcroft_karp_matching(split, top_nodes=top)
    matched = {i: matching[("L", i)][1] for i in range(k) if ("L", i) in matching}

    # chains follow matched successors from every class with no matched predecessor
    has_pred = set(matched.values())
    chains: list[tuple[int, ...]] = []
    for start in range(k):
        if start in has_pred:
            continue
        members: list[int] = []
        node: int | None = start
        while node is not None:
            members.extend(pre.classes[node])
            node = matched.get(node)
        chains.append(tuple(sorted(members)))
    width = k - len(matched)

    cover = nx.bipartite.to_vertex_cover(split, matching, top_nodes=top)
    free = [i for i in range(k) if ("L", i) not in cover and ("R", i) not in cover]
    antichain = tuple(pre.classes[i][0] for i in free)

    if len(chains) != width or len(antichain) != width or not pre.is_antichain(antichain):
        raise InvariantViolation(
            "Dilworth witnesses disagree",
            {"width": width, "chains": len(chains), "antichain": antichain},
        )
    return DilworthResult(width=width, antichain=antichain, chains=tuple(sorted(chains)))


def dilworth_number(g: Graph) -> int:
    """∇(G): minimum number of chains covering the vicinal preorder."""
    return dilworth_decomposition(g).width


def threshold_creation_sequence(g: Graph) -> tuple[ThresholdStep, ...] | None:
    """Isolated/universal build order of *g*, or ``None`` when there is none.

    Peel-off removes isolated or universal vertices of the remaining graph
    until none is left; replaying the steps rebuilds a graph isomorphic to *g*.
    """
    remaining = g.full_mask
    peeled: list[ThresholdStep] = []
    while remaining:
        for v in bits(remaining):
            nbrs = g.rows[v] & remaining
            if nbrs == 0:
                peeled.append(ThresholdStep.ISOLATED)
                break
            if nbrs == remaining & ~(1 << v):
                peeled.append(ThresholdStep.UNIVERSAL)
                break
        else:
            return None
        remaining &= ~(1 << v)
    return tuple(reversed(peeled))


def is_threshold(g: Graph) -> bool:
    """True iff ∇(G) = 1, cross-checked against the peel-off construction."""
    by_width = dilworth_number(g) == 1
    by_peeling = threshold_creation_sequence(g) is not None
    if by_width != by_peeling:
        raise InvariantViolation(
            "threshold tests disagree", {"width_one": by_width, "peel_off": by_peeling}
        )
    return by_width


def sperner_capacity(k: int, limit: int = INT64_MAX) -> int:
    """``k + C(k, ⌊k/2⌋)``: the largest order a graph with a k-codeword DLD code can have."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    value = k + math.comb(k, k // 2)
    if value > limit:
        raise CapacityOverflowError(f"sperner capacity for k={k} exceeds {limit}")
    return value


def sperner_lower_bound(n: int) -> int:
    """Smallest ``k`` with ``sperner_capacity(k) >= n``."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    k = 1
    while sperner_capacity(k) < n:
        k += 1
    return k


def ld_lower_bound(n: int) -> int:
    """Smallest ``k`` with ``n <= k + 2^k - 1``, the order bound for LD codes."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    k = 1
    while k + 2**k - 1 < n:
        k += 1
    return k
