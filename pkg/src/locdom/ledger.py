# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 locdom contributors. See LICENSE for full terms.
"""Append-only JSONL record of theorem counterexamples."""
from __future__ import annotations

import json
from collections.abc import Iterator, Mapping
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any


@dataclass
class CounterexampleEvent:
    timestamp: str
    graph6: str
    theorem: str
    detail: str
    parameters: dict[str, Any] = field(default_factory=dict)


class CounterexampleLedger:
    """One line per failing check; the graph6 field alone reproduces the failure."""

    def __init__(self, path: str | Path = "counterexamples.jsonl") -> None:
        self.path = Path(path)
        self.path.touch(exist_ok=True)

    def record(self, dump: Mapping[str, Any]) -> CounterexampleEvent:
        event = CounterexampleEvent(
            timestamp=datetime.now(timezone.utc).isoformat(),
            graph6=str(dump["graph6"]),
            theorem=str(dump["theorem"]),
            detail=str(dump.get("detail", "")),
            parameters=dict(dump.get("parameters", {})),
        )
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(asdict(event), sort_keys=True) + "\n")
        return event

    def read(self) -> Iterator[CounterexampleEvent]:
        with self.path.open("r", encoding="utf-8") as fh:
            for line in fh:
                if not line.strip():
                    continue
                yield CounterexampleEvent(**json.loads(line))
