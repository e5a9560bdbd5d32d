# SPDX-License-Identifier: MPL-2.0
"""Polynomial algorithms for trees.

γ^DLD of a tree comes from support-vertex pruning: a support vertex ``u``
whose only non-leaf neighbour is ``v`` can be removed together with its
leaves ``L_u``, and the optimum drops by exactly ``|L_u|``. Unwinding the
removals rebuilds an optimal code.

γ^SLD of a tree equals γ₂ (trees have infinite girth) and is computed with a
three-state dynamic program.
"""

from __future__ import annotations

import math

import networkx as nx

from locdom.engine.codes import Code, CodeKind, check_mask
from locdom.engine.graph import Graph
from locdom.engine.solvers import SolverMethod, SolverResult
from locdom.exceptions import DomainError, InvariantViolation

INF = math.inf


def _require_tree(t: Graph) -> None:
    if not t.is_tree():
        raise DomainError("graph is not a tree (must be connected and acyclic)")


def leaf_count(t: Graph) -> int:
    """ℓ(T): vertices of degree one."""
    return sum(1 for row in t.rows if row.bit_count() == 1)


def support_vertices(t: Graph) -> list[int]:
    """Vertices adjacent to at least one leaf."""
    return [u for u in range(t.n) if any(t.degree(w) == 1 for w in t.neighbors(u))]


def leaf_support_bound(t: Graph) -> int:
    """``⌈(n + ℓ(T) - s(T)) / 2⌉``, a lower bound on γ^DLD(T)."""
    _require_tree(t)
    return (t.n + leaf_count(t) - len(support_vertices(t)) + 1) // 2


def _star_centre(adj: dict[int, set[int]]) -> int | None:
    alive = len(adj)
    centres = [u for u in sorted(adj) if len(adj[u]) == alive - 1]
    return centres[-1] if centres else None


def tree_gamma_dld(t: Graph) -> SolverResult:
    """γ^DLD(T) by repeated support-vertex pruning."""
    _require_tree(t)
    adj = {u: set(t.neighbors(u)) for u in range(t.n)}
    steps: list[tuple[int, tuple[int, ...], int]] = []
    nodes = 0
    while len(adj) > 2 and _star_centre(adj) is None:
        for u in sorted(adj):
            nodes += 1
            leaves = tuple(sorted(w for w in adj[u] if len(adj[w]) == 1))
            inner = [w for w in adj[u] if len(adj[w]) > 1]
            if leaves and len(inner) == 1:
                break
        else:
            raise InvariantViolation("no prunable support vertex in a non-star tree")
        v = inner[0]
        steps.append((u, leaves, v))
        for w in leaves:
            del adj[w]
        del adj[u]
        adj[v].discard(u)

    if len(adj) == 1:
        code = set(adj)
    else:
        centre = _star_centre(adj)
        code = set(adj) - {centre}

    for u, leaves, v in reversed(steps):
        if v in code:
            code |= set(leaves[1:]) | {u}
        else:
            code |= set(leaves)

    witness = Code.of(code)
    if not check_mask(t, witness.mask, CodeKind.DLD):
        raise InvariantViolation("pruned tree code is not DLD", {"code": witness.sorted()})
    return SolverResult(len(witness), witness, nodes, 1, SolverMethod.TREE_LINEAR)


def tree_gamma_sld(t: Graph) -> SolverResult:
    """γ^SLD(T) = γ₂(T) by dynamic programming over a rooted tree.

    States per vertex ``v``:
      * ``inside``: ``v`` is in the set;
      * ``needs_one``: ``v`` is outside with one child inside, so the parent
        must be inside;
      * ``twice``: ``v`` is outside with at least two children inside.
    """
    _require_tree(t)
    tree = t.to_networkx()
    order = list(nx.dfs_preorder_nodes(tree, 0))
    parent = nx.dfs_predecessors(tree, 0)
    children: dict[int, list[int]] = {u: [] for u in order}
    for u in order[1:]:
        children[parent[u]].append(u)

    inside: dict[int, float] = {}
    needs_one: dict[int, float] = {}
    twice: dict[int, float] = {}
    tables: dict[int, list[list[float]]] = {}
    for v in reversed(order):
        inside[v] = 1 + sum(min(inside[c], needs_one[c], twice[c]) for c in children[v])
        # table[i][k]: best cost of the first i children with min(k, 2) of them inside
        table = [[0.0, INF, INF]]
        for c in children[v]:
            prev = table[-1]
            row = [INF, INF, INF]
            for k in range(3):
                if prev[k] == INF:
                    continue
                row[k] = min(row[k], prev[k] + twice[c])
                up = min(k + 1, 2)
                row[up] = min(row[up], prev[k] + inside[c])
            table.append(row)
        tables[v] = table
        needs_one[v] = table[-1][1]
        twice[v] = table[-1][2]

    root = order[0]
    value = min(inside[root], twice[root])
    state = {root: "inside" if inside[root] <= twice[root] else "twice"}
    for v in order:
        kids = children[v]
        if state[v] == "inside":
            for c in kids:
                options = {"inside": inside[c], "needs_one": needs_one[c], "twice": twice[c]}
                state[c] = min(options, key=lambda s: options[s])
            continue
        k = 1 if state[v] == "needs_one" else 2
        table = tables[v]
        for i in range(len(kids), 0, -1):
            c = kids[i - 1]
            if table[i - 1][k] + twice[c] == table[i][k]:
                state[c] = "twice"
                continue
            state[c] = "inside"
            sources = [k - 1] if k == 1 else [1, 2]
            k = next(s for s in sources if table[i - 1][s] + inside[c] == table[i][k])

    witness = Code.of(u for u, s in state.items() if s == "inside")
    if len(witness) != value or not check_mask(t, witness.mask, CodeKind.SLD):
        raise InvariantViolation(
            "tree 2-domination program produced an invalid witness",
            {"value": value, "witness": witness.sorted()},
        )
    return SolverResult(int(value), witness, t.n, 1, SolverMethod.TREE_LINEAR)
