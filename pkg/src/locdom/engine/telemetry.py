# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 locdom contributors. See LICENSE for full terms.

"""Prometheus metrics for solver and sweep activity.

Safe to import without ``prometheus_client``: every metric then degrades to
a no-op object with the same ``observe``/``inc`` surface.
"""
from __future__ import annotations

from typing import Any

from locdom.logging_config import configure_logger

logger = configure_logger(__name__)

try:
    from prometheus_client import CollectorRegistry, Counter, Histogram  # type: ignore

    REGISTRY = CollectorRegistry(auto_describe=True)

    SOLVER_NODES = Histogram(
        "locdom_solver_nodes_explored",
        "Search-tree nodes visited per exact solve",
        ["kind", "method"],
        buckets=(1, 10, 100, 1_000, 10_000, 100_000, 1_000_000),
        registry=REGISTRY,
    )
    SOLVE_LATENCY_MS = Histogram(
        "locdom_solve_latency_ms",
        "Wall-clock time per exact solve (ms)",
        ["kind"],
        registry=REGISTRY,
    )
    GRAPHS_CHECKED = Counter(
        "locdom_graphs_checked_total",
        "Graphs evaluated by the theorem harness",
        registry=REGISTRY,
    )
    THEOREM_FAILURES = Counter(
        "locdom_theorem_failures_total",
        "Theorem checks that returned fail",
        ["theorem"],
        registry=REGISTRY,
    )
except ImportError:  # pragma: no cover - prom optional
    REGISTRY = None  # type: ignore

    class _NoOp:
        def __call__(self, *args: Any, **kwargs: Any) -> None:
            return None

        def labels(self, *args: Any, **kwargs: Any) -> _NoOp:
            return self

        def observe(self, *args: Any, **kwargs: Any) -> None:  # for Histogram
            return None

        def inc(self, *args: Any, **kwargs: Any) -> None:  # for Counter
            return None

    SOLVER_NODES = _NoOp()  # type: ignore
    SOLVE_LATENCY_MS = _NoOp()  # type: ignore
    GRAPHS_CHECKED = _NoOp()  # type: ignore
    THEOREM_FAILURES = _NoOp()  # type: ignore
    logger.debug("prometheus_client not installed; metrics disabled")


__all__ = [
    "REGISTRY",
    "SOLVER_NODES",
    "SOLVE_LATENCY_MS",
    "GRAPHS_CHECKED",
    "THEOREM_FAILURES",
]
