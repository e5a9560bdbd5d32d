# SPDX-License-Identifier: MPL-2.0
"""graph6 codec.

The record is a size prefix followed by the upper triangle of the adjacency
matrix, read column by column (``x(0,1), x(0,2), x(1,2), x(0,3), ...``) and
packed six bits per printable byte (``63 + value``). Emission covers the
short form (``n <= 62``); parsing also accepts the ``~``-prefixed long form.
"""

from __future__ import annotations

from collections.abc import Iterator
from pathlib import Path

from locdom.engine.graph import Graph, emit_edge_list
from locdom.exceptions import GraphFormatError, UnsupportedSizeError

HEADER = ">>graph6<<"
SHORT_FORM_MAX = 62
LONG_FORM_MAX = 258047


def _data_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record. Offsets in errors count from the record start."""
    record = text.strip("\r\n")
    base = 0
    if record.startswith(HEADER):
        record = record[len(HEADER) :]
        base = len(HEADER)
    if not record:
        raise GraphFormatError("empty record", offset=base)
    for i, ch in enumerate(record):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside 63..126", offset=base + i)

    if record[0] != "~":
        n, pos = ord(record[0]) - 63, 1
    else:
        if len(record) < 4:
            raise GraphFormatError(
                "truncated long-form length prefix", offset=base + len(record)
            )
        if record[1] == "~":
            raise GraphFormatError(
                "malformed length prefix: 8-byte form unsupported", offset=base + 1
            )
        n = 0
        for ch in record[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n <= SHORT_FORM_MAX:
            raise GraphFormatError(
                f"malformed length prefix: long form used for n={n}", offset=base
            )
        pos = 4
    if n < 1:
        raise GraphFormatError("malformed length prefix: graph has no vertices", offset=base)

    expected = _data_length(n)
    data = record[pos:]
    if len(data) < expected:
        raise GraphFormatError(
            f"truncated record: {expected} data bytes needed for n={n}, found {len(data)}",
            offset=base + len(record),
        )
    if len(data) > expected:
        raise GraphFormatError("trailing garbage after record", offset=base + pos + expected)

    rows = [0] * n
    k = 0
    values = [ord(ch) - 63 for ch in data]
    for j in range(1, n):
        for i in range(j):
            if values[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> str:
    """Encode *g* in short-form graph6 (no header)."""
    if g.n > SHORT_FORM_MAX:
        raise UnsupportedSizeError(
            f"graph6 short form holds at most {SHORT_FORM_MAX} vertices, graph has {g.n}"
        )
    out = [chr(63 + g.n)]
    value = 0
    k = 0
    for j in range(1, g.n):
        for i in range(j):
            value = (value << 1) | (g.rows[i] >> j & 1)
            k += 1
            if k % 6 == 0:
                out.append(chr(63 + value))
                value = 0
    if k % 6:
        out.append(chr(63 + (value << (6 - k % 6))))
    return "".join(out)


def graph_key(g: Graph) -> str:
    """graph6 while the short form fits, else the edge-list text."""
    if g.n > SHORT_FORM_MAX:
        return emit_edge_list(g)
    return emit_graph6(g)


def iter_graph6_file(path: str | Path) -> Iterator[tuple[int, str, Graph]]:
    """Yield ``(line number, record, graph)``; blank and ``#`` lines are skipped."""
    with open(path, encoding="ascii", errors="replace") as fh:
        for lineno, raw in enumerate(fh, start=1):
            record = raw.strip()
            if not record or record.startswith("#"):
                continue
            try:
                yield lineno, record, parse_graph6(record)
            except GraphFormatError as exc:
                raise exc.at_line(lineno) from exc
