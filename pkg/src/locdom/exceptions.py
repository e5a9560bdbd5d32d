# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 locdom contributors. See LICENSE for full terms.
"""Exception hierarchy shared by every locdom module."""

from __future__ import annotations


class LocdomError(Exception):
    """Base class for all locdom errors."""


class DomainError(LocdomError, ValueError):
    """Raised when an argument violates an operation's precondition."""


class GraphFormatError(LocdomError, ValueError):
    """Raised when a graph6 record or edge list cannot be decoded."""

    def __init__(self, message: str, offset: int | None = None, line: int | None = None) -> None:
        self.message = message
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)

    def at_line(self, line: int) -> GraphFormatError:
        return GraphFormatError(self.message, offset=self.offset, line=line)


class UnsupportedSizeError(DomainError):
    """Raised when a graph is too large for the requested encoding."""


class InfeasibleParametersError(DomainError):
    """Raised when no graph realizes the requested parameter pair."""


class SolverCapExceeded(LocdomError):
    """Raised when an exact search would exceed the configured vertex cap."""

    def __init__(self, n: int, cap: int) -> None:
        self.n = n
        self.cap = cap
        self.estimate = 2**n
        super().__init__(
            f"graph has {n} vertices, above the exactness cap of {cap}; "
            f"exact search may visit up to 2^{n} = {self.estimate} subsets "
            "(raise the cap or pass --allow-over-cap)"
        )


class NotAvailableError(LocdomError, LookupError):
    """Raised when no closed form is known for a (family, kind) pair."""


class CapacityOverflowError(LocdomError, OverflowError):
    """Raised when Sperner arithmetic leaves the signed 64-bit range."""


class InvariantViolation(LocdomError, RuntimeError):
    """Raised when a built-in self-check disagrees with a computed result."""

    def __init__(self, message: str, details: dict[str, object] | None = None) -> None:
        super().__init__(message)
        self.details = details or {}
