# SPDX-License-Identifier: MPL-2.0
"""Sensor-network simulation.

Every codeword is a sensor that reports ``2`` when it is faulty itself,
``1`` when it is healthy but some neighbour is faulty, ``0`` otherwise.
:func:`locate` turns a report vector back into a verdict and only answers
``located(v)`` when a fault at ``v`` alone reproduces the reports exactly.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum

from locdom.engine.codes import Code, CodeKind
from locdom.engine.graph import Graph, bits, mask_of
from locdom.engine.graph6 import parse_graph6
from locdom.engine.schema import Scenario
from locdom.exceptions import DomainError


@dataclass(frozen=True)
class ReportVector:
    """Reports aligned with ``codewords`` (sorted)."""

    codewords: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.codewords) != len(self.values):
            raise DomainError(
                f"{len(self.values)} reports for {len(self.codewords)} codewords"
            )
        if any(v not in (0, 1, 2) for v in self.values):
            raise DomainError("sensor reports must be 0, 1 or 2")

    def report(self, codeword: int) -> int:
        return self.values[self.codewords.index(codeword)]

    def to_dict(self) -> dict[str, int]:
        return {str(c): v for c, v in zip(self.codewords, self.values)}


class OutcomeTag(str, Enum):
    LOCATED = "located"
    MULTIPLE_OR_INCONSISTENT = "multiple_or_inconsistent"
    NOTHING = "nothing"


@dataclass(frozen=True)
class LocationOutcome:
    tag: OutcomeTag
    vertex: int | None = None
    confirmed_faults: tuple[int, ...] = field(default=())

    def to_dict(self) -> dict[str, object]:
        return {
            "outcome": self.tag.value,
            "vertex": self.vertex,
            "confirmed_faults": list(self.confirmed_faults),
        }


def _reports_for(g: Graph, codewords: tuple[int, ...], faults: int) -> tuple[int, ...]:
    values = []
    for c in codewords:
        if faults >> c & 1:
            values.append(2)
        elif g.rows[c] & faults:
            values.append(1)
        else:
            values.append(0)
    return tuple(values)


def sensor_reports(g: Graph, c: Code, faults: Iterable[int]) -> ReportVector:
    """Reports every sensor of *c* sends when *faults* are faulty."""
    c.validate(g)
    fault_list = list(faults)
    for v in fault_list:
        g.check_vertex(v)
    codewords = tuple(c.sorted())
    return ReportVector(codewords, _reports_for(g, codewords, mask_of(fault_list)))


def locate(
    g: Graph,
    c: Code,
    r: ReportVector,
    *,
    decoding: CodeKind = CodeKind.SLD,
    recheck: bool = True,
) -> LocationOutcome:
    """Decode *r* into a single fault location when the reports allow it.

    A faulty sensor is identified by its own ``2``. Otherwise the candidates
    are the common closed neighbours of all sensors reporting ``1``; DLD
    decoding also discards codewords. A unique candidate is accepted only if
    re-simulating a fault there gives back *r* (unless *recheck* is off).
    """
    codewords = tuple(c.sorted())
    c.validate(g)
    if r.codewords != codewords:
        raise DomainError("report vector does not match the code's codewords")
    decoding = CodeKind(decoding)
    if decoding not in (CodeKind.SLD, CodeKind.DLD):
        raise DomainError("decoding must be SLD or DLD")

    def explains(vertex: int) -> bool:
        return not recheck or _reports_for(g, codewords, 1 << vertex) == r.values

    twos = tuple(cw for cw, value in zip(codewords, r.values) if value == 2)
    if len(twos) > 1:
        return LocationOutcome(OutcomeTag.MULTIPLE_OR_INCONSISTENT, confirmed_faults=twos)
    if twos:
        if explains(twos[0]):
            return LocationOutcome(OutcomeTag.LOCATED, vertex=twos[0], confirmed_faults=twos)
        return LocationOutcome(OutcomeTag.MULTIPLE_OR_INCONSISTENT, confirmed_faults=twos)

    alarmed = [cw for cw, value in zip(codewords, r.values) if value == 1]
    if not alarmed:
        return LocationOutcome(OutcomeTag.NOTHING)
    candidates = g.full_mask
    for cw in alarmed:
        candidates &= g.closed_rows[cw]
    if decoding is CodeKind.DLD:
        candidates &= ~c.mask
    found = list(bits(candidates))
    if len(found) == 1 and explains(found[0]):
        return LocationOutcome(OutcomeTag.LOCATED, vertex=found[0])
    return LocationOutcome(OutcomeTag.MULTIPLE_OR_INCONSISTENT)


@dataclass(frozen=True)
class SimulationResult:
    scenario: Scenario
    reports: ReportVector
    outcome: LocationOutcome

    @property
    def correct(self) -> bool:
        """True when a ``located`` verdict names one of the injected faults."""
        if self.outcome.tag is not OutcomeTag.LOCATED:
            return True
        return self.outcome.vertex in self.scenario.faults

    def to_dict(self) -> dict[str, object]:
        return {
            "graph6": self.scenario.graph6,
            "code": sorted(self.scenario.code),
            "faults": sorted(self.scenario.faults),
            "decoding": self.scenario.decoding.value,
            "reports": self.reports.to_dict(),
            **self.outcome.to_dict(),
            "correct": self.correct,
        }


def simulate_scenario(scenario: Scenario) -> SimulationResult:
    g = parse_graph6(scenario.graph6)
    code = Code.of(scenario.code)
    reports = sensor_reports(g, code, scenario.faults)
    outcome = locate(g, code, reports, decoding=scenario.decoding)
    return SimulationResult(scenario, reports, outcome)
