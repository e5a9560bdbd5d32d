# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 locdom contributors. See LICENSE for full terms.

"""Turn user input into graphs and scenarios.

Graphs come from a graph6 string, a file (graph6 records, or an edge list
when the suffix is ``.edges``) or a named family. Scenarios come from JSON
or YAML files validated against :class:`Scenario`.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import yaml  # type: ignore
from pydantic import ValidationError

from locdom.engine.families import FamilyTag, GraphFamily, ThresholdStep, generate
from locdom.engine.graph import Graph, parse_edge_list
from locdom.engine.graph6 import iter_graph6_file, parse_graph6
from locdom.engine.schema import Scenario
from locdom.exceptions import DomainError, GraphFormatError

_TWO_PARAMETER = (FamilyTag.COMPLETE_BIPARTITE, FamilyTag.ROOK)


def _is_file(path: Path) -> bool:
    try:
        return path.is_file()
    except OSError:
        return False


def load_graph(source: str) -> Graph:
    """Read a graph from a graph6 string or a file path."""
    path = Path(source)
    if _is_file(path):
        if path.suffix == ".edges":
            return parse_edge_list(path.read_text(encoding="utf-8"))
        for _, _, graph in iter_graph6_file(path):
            return graph
        raise GraphFormatError(f"{source}: file holds no graph6 record")
    return parse_graph6(source)


def family_graph(
    name: str, n: int | None = None, m: int | None = None, sequence: str | None = None
) -> Graph:
    """Generate ``name`` with ``--n``/``--m`` or a threshold ``i``/``u`` sequence."""
    try:
        tag = FamilyTag(name)
    except ValueError:
        known = ", ".join(t.value for t in FamilyTag)
        raise DomainError(f"unknown family {name!r} (choose from {known})") from None
    if tag is FamilyTag.THRESHOLD:
        if not sequence:
            raise DomainError("threshold family needs --sequence, e.g. --sequence iuu")
        return generate(GraphFamily(tag, ThresholdStep.parse(sequence)))
    if n is None:
        raise DomainError(f"{tag.value} needs --n")
    if tag in _TWO_PARAMETER:
        if m is None:
            raise DomainError(f"{tag.value} needs --n and --m")
        return generate(GraphFamily.of(tag, n, m))
    return generate(GraphFamily.of(tag, n))


def _load_yaml(path: Path) -> Any:
    raw = path.read_text(encoding="utf-8")
    return yaml.safe_load(raw) if raw.strip() else {}


def load_scenario(path: str | Path) -> Scenario:
    """Load a locator scenario from ``.json``, ``.yaml`` or ``.yml``."""
    path = Path(path)
    if path.suffix in (".yaml", ".yml"):
        data = _load_yaml(path)
    elif path.suffix == ".json":
        data = json.loads(path.read_text(encoding="utf-8"))
    else:
        raise DomainError(f"unsupported scenario format {path.suffix!r} (use .json or .yaml)")
    if not isinstance(data, dict):
        raise DomainError(f"{path}: scenario must be a mapping")
    try:
        return Scenario(**data)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise DomainError(f"{path}: {where}: {first['msg']}") from None
