# SPDX-License-Identifier: MPL-2.0
"""Codes, I-sets and the code predicates.

A code ``C`` is a non-empty vertex set; the I-set of ``u`` is
``I(C;u) = N[u] ∩ C``. Every predicate works on bitmasks: with ``closed[u]``
the closed neighbourhood of ``u`` and ``cmask`` the code, ``I(C;u)`` is
``closed[u] & cmask``.

SLD and DLD are available both in their defining form and in the
characterisation form (pairwise I-set differences); the two are kept
separate so the test-suite can check that they agree.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum

from locdom.engine.graph import Graph, bits, mask_of
from locdom.exceptions import DomainError, InvariantViolation


class CodeKind(str, Enum):
    DOM = "DOM"
    DOM2 = "DOM2"
    LD = "LD"
    SLD = "SLD"
    DLD = "DLD"

    @classmethod
    def parse(cls, text: str) -> CodeKind:
        try:
            return cls(text.strip().upper())
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise DomainError(f"unknown code kind {text!r} (choose from {choices})") from None


class Form(str, Enum):
    DEFINITION = "definition"
    CHARACTERIZATION = "characterization"


@dataclass(frozen=True)
class Code:
    """A set of codewords; carries no graph and is validated at use time."""

    members: frozenset[int]

    @classmethod
    def of(cls, vertices: Iterable[int]) -> Code:
        return cls(frozenset(int(v) for v in vertices))

    @classmethod
    def from_mask(cls, mask: int) -> Code:
        return cls(frozenset(bits(mask)))

    @property
    def mask(self) -> int:
        return mask_of(self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def validate(self, g: Graph) -> int:
        """Return the bitmask of the code after checking it against *g*."""
        if not self.members:
            raise DomainError("a code must be non-empty")
        for v in self.members:
            if not 0 <= v < g.n:
                raise DomainError(f"codeword {v} out of range 0..{g.n - 1}")
        return self.mask


def identifying_set(g: Graph, c: Code, u: int) -> frozenset[int]:
    """``I(C;u) = N[u] ∩ C``."""
    cmask = c.validate(g)
    return frozenset(bits(g.closed_mask(u) & cmask))


def non_codeword_isets(g: Graph, c: Code) -> dict[int, frozenset[int]]:
    """I-sets of every non-codeword, keyed by vertex."""
    cmask = c.validate(g)
    return {
        u: frozenset(bits(g.closed_rows[u] & cmask)) for u in range(g.n) if not cmask >> u & 1
    }


def _intersect_closed(g: Graph, iset: int) -> int:
    acc = g.full_mask
    for c in bits(iset):
        acc &= g.closed_rows[c]
    return acc


def _outside(g: Graph, cmask: int) -> list[int]:
    return [u for u in range(g.n) if not cmask >> u & 1]


def _dominating(g: Graph, cmask: int, times: int) -> bool:
    if times == 1:
        return all(g.closed_rows[u] & cmask for u in _outside(g, cmask))
    return all((g.rows[u] & cmask).bit_count() >= times for u in _outside(g, cmask))


def _locating(g: Graph, cmask: int) -> bool:
    isets = [g.closed_rows[u] & cmask for u in _outside(g, cmask)]
    return all(isets) and len(set(isets)) == len(isets)


def _dld_definition(g: Graph, cmask: int) -> bool:
    isets = [g.closed_rows[u] & cmask for u in _outside(g, cmask)]
    if not all(isets):
        return False
    for i, a in enumerate(isets):
        for j, b in enumerate(isets):
            if i != j and a & ~b == 0:
                return False
    return True


def _sld_definition(g: Graph, cmask: int) -> bool:
    for u in _outside(g, cmask):
        iset = g.closed_rows[u] & cmask
        if not iset or _intersect_closed(g, iset) != 1 << u:
            return False
    return True


def _sld_characterization(g: Graph, cmask: int) -> bool:
    isets = [g.closed_rows[v] & cmask for v in range(g.n)]
    for u in _outside(g, cmask):
        for v in range(g.n):
            if v != u and isets[u] & ~isets[v] == 0:
                return False
    return True


def _dld_characterization(g: Graph, cmask: int) -> bool:
    for u in _outside(g, cmask):
        iset = g.closed_rows[u] & cmask
        if not iset or _intersect_closed(g, iset) & ~cmask != 1 << u:
            return False
    return True


def check_mask(g: Graph, cmask: int, kind: CodeKind, form: Form = Form.DEFINITION) -> bool:
    """Predicate on a pre-validated non-empty bitmask; used by the solvers."""
    if kind is CodeKind.DOM:
        return _dominating(g, cmask, 1)
    if kind is CodeKind.DOM2:
        return _dominating(g, cmask, 2)
    if kind is CodeKind.LD:
        return _locating(g, cmask)
    use_characterization = form is Form.CHARACTERIZATION and g.n >= 2
    if kind is CodeKind.SLD:
        if use_characterization:
            return _sld_characterization(g, cmask)
        return _sld_definition(g, cmask)
    return _dld_characterization(g, cmask) if use_characterization else _dld_definition(g, cmask)


def is_code(g: Graph, c: Code, kind: CodeKind, form: Form = Form.DEFINITION) -> bool:
    """True iff *c* has property *kind* on *g*.

    On a single vertex the characterisation forms fall back to the
    definitions, which is where their hypothesis ``n >= 2`` fails.
    """
    return check_mask(g, c.validate(g), CodeKind(kind), Form(form))


def forced_sld_codewords(g: Graph) -> frozenset[int]:
    """Vertices contained in every SLD code of *g*.

    ``u`` is forced exactly when some other vertex ``v`` has
    ``N(u) ⊆ N[v]``; the lone vertex of ``K1`` is forced.
    """
    if g.n == 1:
        return frozenset({0})
    forced = set()
    for u in range(g.n):
        if any(v != u and g.rows[u] & ~g.closed_rows[v] == 0 for v in range(g.n)):
            forced.add(u)
    return frozenset(forced)


def drop_one_dld_code(g: Graph, u: int) -> Code:
    """``V \\ {u}`` for a non-isolated ``u``, which is always a DLD code."""
    if g.open_mask(u) == 0:
        raise DomainError(f"vertex {u} is isolated; V \\ {{{u}}} does not dominate it")
    code = Code.from_mask(g.full_mask & ~(1 << u))
    if not is_code(g, code, CodeKind.DLD):
        raise InvariantViolation(
            "V minus a non-isolated vertex failed the DLD check", {"vertex": u, "n": g.n}
        )
    return code
