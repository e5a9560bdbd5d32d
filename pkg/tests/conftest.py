# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 locdom contributors. See LICENSE for full terms.
"""Test configuration – ensures ``src`` is on ``sys.path`` and shares fixtures.

``pytest.ini`` already sets ``pythonpath``; the insert below covers IDEs that
launch pytest from elsewhere.
"""
from __future__ import annotations

import pathlib
import sys

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[1]
SRC = ROOT / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from locdom.engine.graph import Graph  # noqa: E402

FIXTURES = ROOT / "tests" / "fixtures"

# a..f = 0..5
WORKED_EDGES = [(0, 1), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (4, 5)]


@pytest.fixture
def worked_graph() -> Graph:
    return Graph.from_edges(6, WORKED_EDGES, labels="abcdef")


@pytest.fixture
def fixtures_dir() -> pathlib.Path:
    return FIXTURES
