# SPDX-License-Identifier: MPL-2.0
"""Exact closed-form code numbers for the families where they are proved."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from locdom.engine.codes import Code, CodeKind
from locdom.engine.families import FamilyTag
from locdom.exceptions import DomainError, NotAvailableError


@dataclass(frozen=True)
class ClosedFormQuery:
    family: FamilyTag
    params: tuple[int, ...]
    kind: CodeKind

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", FamilyTag(self.family))
        object.__setattr__(self, "kind", CodeKind(self.kind))
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


# (family, kind) -> (arity, minimum of the first parameter, formula)
_Rule = tuple[int, int, Callable[..., int]]

_RULES: dict[tuple[FamilyTag, CodeKind], _Rule] = {
    (FamilyTag.PATH, CodeKind.SLD): (1, 2, lambda n: _ceil_half(n + 1)),
    (FamilyTag.PATH, CodeKind.DOM2): (1, 1, lambda n: _ceil_half(n + 1)),
    (FamilyTag.PATH, CodeKind.DLD): (1, 1, _ceil_half),
    (FamilyTag.CYCLE, CodeKind.SLD): (1, 5, _ceil_half),
    (FamilyTag.CYCLE, CodeKind.DLD): (1, 5, _ceil_half),
    (FamilyTag.LADDER, CodeKind.SLD): (1, 2, lambda n: n + 1 if n % 2 else n + 2),
    (FamilyTag.LADDER, CodeKind.DLD): (1, 1, lambda n: n),
    (FamilyTag.LADDER, CodeKind.DOM2): (1, 1, lambda n: n if n >= 2 else 2),
    (FamilyTag.COMPLETE, CodeKind.SLD): (1, 1, lambda m: m),
    (FamilyTag.COMPLETE, CodeKind.DLD): (1, 2, lambda m: m - 1),
    (FamilyTag.STAR, CodeKind.SLD): (1, 3, lambda n: n - 1),
    (FamilyTag.STAR, CodeKind.DLD): (1, 3, lambda n: n - 1),
    (FamilyTag.ROOK, CodeKind.SLD): (2, 2, lambda m, n: m),
}
for _kind in CodeKind:
    _RULES[(FamilyTag.DISCRETE, _kind)] = (1, 1, lambda n: n)


def closed_form(q: ClosedFormQuery) -> int:
    """Value of ``q.kind`` on ``q.family(*q.params)``.

    Raises:
        NotAvailableError: no proved formula covers the pair or the range.
        DomainError: wrong number of parameters.
    """
    rule = _RULES.get((q.family, q.kind))
    if rule is None:
        raise NotAvailableError(f"no closed form for {q.kind.value} on {q.family.value}")
    arity, minimum, formula = rule
    if len(q.params) != arity:
        raise DomainError(f"{q.family.value} takes {arity} parameter(s), got {len(q.params)}")
    if q.params[0] < minimum:
        raise NotAvailableError(
            f"closed form for {q.kind.value} on {q.family.value} needs parameter >= {minimum}"
        )
    if q.family is FamilyTag.ROOK and q.params[0] < 2 * q.params[1]:
        raise NotAvailableError("rook closed form needs m >= 2n")
    return formula(*q.params)


def ladder_witness(n: int, kind: CodeKind) -> Code:
    """Optimal code of ``P_n □ P_2`` in the product's vertex indexing.

    Rung ``i`` (1-based) is the vertex pair ``2(i-1), 2(i-1)+1``. SLD takes the
    odd rungs, plus the last rung when ``n`` is even; DLD takes one full row.
    """
    kind = CodeKind(kind)
    if kind is CodeKind.DLD and n >= 1:
        return Code.of(2 * i for i in range(n))
    if kind is CodeKind.SLD and n >= 2:
        rungs = set(range(1, n + 1, 2)) | {n}
        return Code.of(v for r in rungs for v in (2 * (r - 1), 2 * (r - 1) + 1))
    raise NotAvailableError(f"no ladder witness for {kind.value} with n={n}")
