# SPDX-License-Identifier: MPL-2.0
"""Named graph families used by fixtures, closed forms and the CLI."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import networkx as nx

from locdom.engine.graph import Graph, cartesian_product, mask_of
from locdom.exceptions import DomainError


class FamilyTag(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    DISCRETE = "discrete"
    LADDER = "ladder"
    THRESHOLD = "threshold"
    ROOK = "rook"


class ThresholdStep(int, Enum):
    ISOLATED = 0
    UNIVERSAL = 1

    @classmethod
    def parse(cls, text: str) -> tuple[ThresholdStep, ...]:
        """Read a creation sequence written as ``i``/``u`` letters, e.g. ``"iuu"``."""
        table = {"i": cls.ISOLATED, "u": cls.UNIVERSAL}
        try:
            return tuple(table[ch] for ch in text.strip().lower())
        except KeyError as exc:
            raise DomainError(f"threshold steps are 'i' or 'u', got {exc.args[0]!r}") from None


# number of integer parameters; ``None`` means variable length (threshold)
_ARITY: dict[FamilyTag, int | None] = {
    FamilyTag.PATH: 1,
    FamilyTag.CYCLE: 1,
    FamilyTag.STAR: 1,
    FamilyTag.COMPLETE: 1,
    FamilyTag.COMPLETE_BIPARTITE: 2,
    FamilyTag.DISCRETE: 1,
    FamilyTag.LADDER: 1,
    FamilyTag.THRESHOLD: None,
    FamilyTag.ROOK: 2,
}


@dataclass(frozen=True)
class GraphFamily:
    """A family tag with its integer parameters.

    ``star(n)`` is ``K_{1,n-1}`` on ``n`` vertices with the centre at 0;
    ``threshold`` parameters are :class:`ThresholdStep` values in creation
    order; ``rook(m, n)`` is ``K_m □ K_n``.
    """

    family: FamilyTag
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", FamilyTag(self.family))
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        arity = _ARITY[self.family]
        if arity is not None and len(self.params) != arity:
            raise DomainError(
                f"{self.family.value} takes {arity} parameter(s), got {len(self.params)}"
            )
        if self.family is FamilyTag.THRESHOLD:
            if not self.params:
                raise DomainError("threshold creation sequence must be non-empty")
            if any(p not in (0, 1) for p in self.params):
                raise DomainError("threshold steps must be 0 (isolated) or 1 (universal)")
            return
        minimum = 3 if self.family is FamilyTag.CYCLE else 1
        for p in self.params:
            if p < minimum:
                raise DomainError(f"{self.family.value} parameters must be >= {minimum}, got {p}")

    @classmethod
    def of(cls, family: str | FamilyTag, *params: int) -> GraphFamily:
        return cls(FamilyTag(family), tuple(params))


def generate(spec: GraphFamily) -> Graph:
    """Build the graph named by *spec*."""
    p = spec.params
    match spec.family:
        case FamilyTag.PATH:
            return Graph.from_networkx(nx.path_graph(p[0]))
        case FamilyTag.CYCLE:
            return Graph.from_networkx(nx.cycle_graph(p[0]))
        case FamilyTag.STAR:
            return Graph.from_networkx(nx.star_graph(p[0] - 1))
        case FamilyTag.COMPLETE:
            return Graph.from_networkx(nx.complete_graph(p[0]))
        case FamilyTag.COMPLETE_BIPARTITE:
            return Graph.from_networkx(nx.complete_bipartite_graph(*p))
        case FamilyTag.DISCRETE:
            return Graph.from_networkx(nx.empty_graph(p[0]))
        case FamilyTag.LADDER:
            return cartesian_product(
                generate(GraphFamily.of("path", p[0])), generate(GraphFamily.of("path", 2))
            )
        case FamilyTag.ROOK:
            return cartesian_product(
                generate(GraphFamily.of("complete", p[0])),
                generate(GraphFamily.of("complete", p[1])),
            )
        case FamilyTag.THRESHOLD:
            rows: list[int] = []
            for step in p:
                v = len(rows)
                if step == ThresholdStep.UNIVERSAL:
                    rows = [row | (1 << v) for row in rows]
                    rows.append(mask_of(range(v)))
                else:
                    rows.append(0)
            return Graph(len(rows), tuple(rows))
    raise DomainError(f"unknown family {spec.family!r}")  # pragma: no cover
