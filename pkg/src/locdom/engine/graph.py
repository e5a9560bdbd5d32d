# SPDX-License-Identifier: MPL-2.0
"""Immutable simple graphs stored as per-vertex neighbourhood bitmasks.

Vertices are the dense integers ``0..n-1``. Row ``u`` of :class:`Graph` is an
``int`` whose bit ``v`` is set when ``uv`` is an edge, so neighbourhood
intersections and I-set computations are single integer operations. Display
names (``a..f`` in hand-written fixtures, ``(u,v)`` in products) live only in
``labels``.

The module also hosts the graph operators (complement, Cartesian product,
square), BFS distances and girth, and the edge-list text codec.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx
import numpy as np

from locdom.exceptions import DomainError, GraphFormatError


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of *mask* in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Attributes:
        n: Number of vertices, at least one.
        rows: Open-neighbourhood bitmask of every vertex.
        labels: Optional display string per vertex. Not part of equality.
    """

    n: int
    rows: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError("a graph needs at least one vertex")
        if len(self.rows) != self.n:
            raise DomainError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        if self.labels is not None and len(self.labels) != self.n:
            raise DomainError(f"expected {self.n} labels, got {len(self.labels)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise DomainError(f"vertex {u} has a neighbour outside 0..{self.n - 1}")
            if row >> u & 1:
                raise DomainError(f"self-loop at vertex {u}")
            for v in bits(row):
                if not self.rows[v] >> u & 1:
                    raise DomainError(f"adjacency is not symmetric on edge {u}-{v}")

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> Graph:
        if n < 1:
            raise DomainError("a graph needs at least one vertex")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge {u}-{v} leaves the vertex range 0..{n - 1}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(labels) if labels is not None else None)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls.from_edges(n, ())

    @classmethod
    def from_adjacency(cls, matrix: np.ndarray) -> Graph:
        """Build a graph from a square boolean (or 0/1) matrix."""
        adj = np.asarray(matrix, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise DomainError(f"adjacency must be square, got shape {adj.shape}")
        if adj.diagonal().any():
            raise DomainError("adjacency has a non-zero diagonal")
        if not np.array_equal(adj, adj.T):
            raise DomainError("adjacency is not symmetric")
        rows = tuple(mask_of(np.flatnonzero(row).tolist()) for row in adj)
        return cls(adj.shape[0], rows)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Graph:
        """Convert a networkx graph, numbering nodes in sorted order."""
        relabeled = nx.convert_node_labels_to_integers(graph, ordering="sorted")
        return cls.from_edges(relabeled.number_of_nodes(), relabeled.edges())

    # ------------------------------------------------------------------
    # Neighbourhoods and derived quantities
    # ------------------------------------------------------------------
    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def closed_rows(self) -> tuple[int, ...]:
        return tuple(row | (1 << u) for u, row in enumerate(self.rows))

    @cached_property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    @cached_property
    def max_degree(self) -> int:
        return max(row.bit_count() for row in self.rows)

    def check_vertex(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise DomainError(f"vertex {u} out of range 0..{self.n - 1}")

    def open_mask(self, u: int) -> int:
        self.check_vertex(u)
        return self.rows[u]

    def closed_mask(self, u: int) -> int:
        self.check_vertex(u)
        return self.closed_rows[u]

    def neighbors(self, u: int) -> list[int]:
        return list(bits(self.open_mask(u)))

    def degree(self, u: int) -> int:
        return self.open_mask(u).bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(v)
        return bool(self.open_mask(u) >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Sorted edge list with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def isolated_vertices(self) -> list[int]:
        return [u for u, row in enumerate(self.rows) if row == 0]

    def label(self, u: int) -> str:
        self.check_vertex(u)
        return self.labels[u] if self.labels is not None else str(u)

    def adjacency_matrix(self) -> np.ndarray:
        """Read-only boolean adjacency matrix."""
        return self._matrix

    @cached_property
    def _matrix(self) -> np.ndarray:
        adj = np.zeros((self.n, self.n), dtype=bool)
        for u, row in enumerate(self.rows):
            adj[u, list(bits(row))] = True
        adj.setflags(write=False)
        return adj

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and self.is_connected()

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        """Subgraph on *vertices*, renumbered in increasing order."""
        keep = sorted(set(vertices))
        if not keep:
            raise DomainError("induced subgraph needs at least one vertex")
        for u in keep:
            self.check_vertex(u)
        index = {u: i for i, u in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        labels = [self.label(u) for u in keep] if self.labels is not None else None
        return Graph.from_edges(len(keep), edges, labels)

    def relabel(self, labels: Sequence[str]) -> Graph:
        return Graph(self.n, self.rows, tuple(labels))


# ----------------------------------------------------------------------
# Operators
# ----------------------------------------------------------------------
def complement(g: Graph) -> Graph:
    """Flip adjacency off the diagonal."""
    full = g.full_mask
    rows = tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.rows))
    return Graph(g.n, rows, g.labels)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product ``g □ h`` with vertex ``(u, v)`` at index ``u*h.n + v``."""
    edges: list[tuple[int, int]] = []
    for u in range(g.n):
        for v, w in h.edges():
            edges.append((u * h.n + v, u * h.n + w))
    for u, x in g.edges():
        for v in range(h.n):
            edges.append((u * h.n + v, x * h.n + v))
    labels = [f"({g.label(u)},{h.label(v)})" for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(g.n * h.n, edges, labels)


def square(g: Graph) -> Graph:
    """Graph joining every pair of distinct vertices at distance at most two."""
    rows = []
    for u in range(g.n):
        reach = g.rows[u]
        for v in bits(g.rows[u]):
            reach |= g.rows[v]
        rows.append(reach & ~(1 << u))
    return Graph(g.n, tuple(rows), g.labels)


def distance(g: Graph, u: int, v: int) -> int | float:
    """BFS distance, ``math.inf`` when *u* and *v* lie in different components."""
    g.check_vertex(u)
    g.check_vertex(v)
    try:
        return int(nx.shortest_path_length(g.to_networkx(), u, v))
    except nx.NetworkXNoPath:
        return math.inf


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    value = nx.girth(g.to_networkx())
    return value if value == math.inf else int(value)


# ----------------------------------------------------------------------
# Edge-list codec
# ----------------------------------------------------------------------
def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header / ``u v`` lines format; ``#`` starts a comment."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", line=lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"expected two integers, got {line!r}", line=lineno) from None
        if header is None:
            if a < 1 or b < 0:
                raise GraphFormatError(f"invalid header n={a} m={b}", line=lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"edge {a}-{b} outside 0..{n - 1}", line=lineno)
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a}", line=lineno)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {a}-{b}", line=lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header announces {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
