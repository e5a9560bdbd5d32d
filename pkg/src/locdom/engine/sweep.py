# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 locdom contributors. See LICENSE for full terms.

"""Graph enumerators and the theorem sweep.

Sources are plain iterators of :class:`Graph`. ``sweep`` feeds them through
:func:`check_graph`, optionally fanned out over worker processes, and folds
the per-graph reports into one order-independent :class:`SweepReport`.
"""

from __future__ import annotations

from collections.abc import Generator, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from pathlib import Path

import networkx as nx

from locdom.engine.graph import Graph
from locdom.engine.graph6 import iter_graph6_file
from locdom.engine.harness import THEOREM_IDS, TheoremReport, TheoremStatus, check_graph
from locdom.engine.schema import SolverSettings, SweepOptions
from locdom.exceptions import DomainError
from locdom.ledger import CounterexampleLedger
from locdom.logging_config import configure_logger

logger = configure_logger(__name__)

LABELED_LIMIT = 7
PRUFER_LIMIT = 8
TREE_LIMIT = 16
PROGRESS_EVERY = 1_000


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2^(n(n-1)/2)`` labeled graphs on ``n`` vertices."""
    if not 1 <= n <= LABELED_LIMIT:
        raise DomainError(f"labeled enumeration needs 1 <= n <= {LABELED_LIMIT}, got {n}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def prufer_trees(n: int) -> Iterator[Graph]:
    """All ``n^(n-2)`` labeled trees on ``n`` vertices, by Prüfer sequence."""
    if not 1 <= n <= PRUFER_LIMIT:
        raise DomainError(f"Prüfer enumeration needs 1 <= n <= {PRUFER_LIMIT}, got {n}")
    if n <= 2:
        yield Graph.from_edges(n, [(0, 1)] if n == 2 else [])
        return
    for sequence in product(range(n), repeat=n - 2):
        yield Graph.from_networkx(nx.from_prufer_sequence(list(sequence)))


def unlabeled_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices."""
    if not 1 <= n <= TREE_LIMIT:
        raise DomainError(f"tree enumeration needs 1 <= n <= {TREE_LIMIT}, got {n}")
    if n == 1:
        yield Graph.empty(1)
        return
    for tree in nx.nonisomorphic_trees(n):
        yield Graph.from_networkx(tree)


def tree_suite(max_n: int) -> Iterator[Graph]:
    """Every tree on ``1..max_n`` vertices, up to isomorphism."""
    for n in range(1, max_n + 1):
        yield from unlabeled_trees(n)


def graph6_source(path: str | Path) -> Iterator[Graph]:
    for _, _, graph in iter_graph6_file(path):
        yield graph


def resolve_source(text: str) -> Iterator[Graph]:
    """``labeled:N``, ``prufer:N``, ``trees:N`` (orders 1..N) or a graph6 file path."""
    kind, sep, arg = text.partition(":")
    enumerators = {"labeled": labeled_graphs, "prufer": prufer_trees, "trees": tree_suite}
    if sep and kind in enumerators:
        try:
            n = int(arg)
        except ValueError:
            raise DomainError(f"{kind}: expects an integer, got {arg!r}") from None
        return enumerators[kind](n)
    path = Path(text)
    if not path.is_file():
        raise DomainError(f"sweep source {text!r} is neither an enumerator nor a graph6 file")
    return graph6_source(path)


@dataclass
class SweepReport:
    """Aggregate of many :class:`TheoremReport` objects."""

    graphs_checked: int = 0
    incomplete: int = 0
    halted: bool = False
    counts: dict[str, dict[str, int]] = field(
        default_factory=lambda: {t: {s.value: 0 for s in TheoremStatus} for t in THEOREM_IDS}
    )
    failures: list[dict[str, object]] = field(default_factory=list)

    def add(self, report: TheoremReport) -> None:
        self.graphs_checked += 1
        self.incomplete += int(report.incomplete)
        for check in report.checks:
            self.counts[check.theorem][check.status.value] += 1
        self.failures.extend(report.counterexamples())

    @property
    def passed(self) -> bool:
        return not self.failures

    def sorted_failures(self) -> list[dict[str, object]]:
        return sorted(self.failures, key=lambda f: (str(f["graph6"]), str(f["theorem"])))

    def to_dict(self) -> dict[str, object]:
        return {
            "graphs_checked": self.graphs_checked,
            "incomplete": self.incomplete,
            "halted": self.halted,
            "theorems": {t: dict(self.counts[t]) for t in sorted(self.counts)},
            "failures": self.sorted_failures(),
        }

    def to_table(self) -> str:
        width = max(len(t) for t in self.counts)
        header = f"{'theorem':<{width}}  {'pass':>8}  {'fail':>8}  {'n/a':>8}"
        lines = [header, "-" * len(header)]
        for theorem in sorted(self.counts):
            c = self.counts[theorem]
            lines.append(
                f"{theorem:<{width}}  {c['pass']:>8}  {c['fail']:>8}  {c['not_applicable']:>8}"
            )
        lines.append(f"graphs checked: {self.graphs_checked} (incomplete: {self.incomplete})")
        for f in self.sorted_failures():
            lines.append(f"FAIL {f['theorem']} on {f['graph6']}: {f['detail']}")
        return "\n".join(lines)


def _check_one(job: tuple[Graph, SolverSettings, bool]) -> TheoremReport:
    graph, settings, include_complement = job
    return check_graph(graph, settings=settings, include_complement=include_complement)


def _reports(
    source: Iterable[Graph], options: SweepOptions
) -> Generator[TheoremReport, None, None]:
    jobs = ((g, options.solver, options.include_complement) for g in source)
    if options.workers == 1:
        yield from map(_check_one, jobs)
        return
    pool = ProcessPoolExecutor(max_workers=options.workers)
    try:
        # map keeps input order, so halting stops at the same graph as a serial run
        yield from pool.map(_check_one, jobs, chunksize=64)
    finally:
        pool.shutdown(wait=True, cancel_futures=True)


def sweep(source: Iterable[Graph], options: SweepOptions | None = None) -> SweepReport:
    """Check every graph of *source*; stop at the first failing graph unless ``keep_going``."""
    options = options or SweepOptions()
    ledger = CounterexampleLedger(options.ledger_path) if options.ledger_path else None
    result = SweepReport()
    reports = _reports(source, options)
    try:
        for report in reports:
            result.add(report)
            if result.graphs_checked % PROGRESS_EVERY == 0:
                logger.info(
                    "checked %d graphs, %d failures", result.graphs_checked, len(result.failures)
                )
            if report.passed:
                continue
            if ledger is not None:
                for dump in report.counterexamples():
                    ledger.record(dump)
            if not options.keep_going:
                result.halted = True
                logger.error("halting sweep at %s", report.graph6)
                break
    finally:
        reports.close()
    logger.info("sweep done: %d graphs, %d failures", result.graphs_checked, len(result.failures))
    return result
