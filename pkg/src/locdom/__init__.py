# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 locdom contributors. See LICENSE for full terms.

"""
locdom - exact locating-dominating codes in graphs

Top-level package. The computational API lives in :mod:`locdom.engine`.
"""

__version__ = "0.1.0"

from .exceptions import (
    CapacityOverflowError,
    DomainError,
    GraphFormatError,
    InfeasibleParametersError,
    InvariantViolation,
    LocdomError,
    NotAvailableError,
    SolverCapExceeded,
    UnsupportedSizeError,
)

__all__ = [
    "__version__",
    "CapacityOverflowError",
    "DomainError",
    "GraphFormatError",
    "InfeasibleParametersError",
    "InvariantViolation",
    "LocdomError",
    "NotAvailableError",
    "SolverCapExceeded",
    "UnsupportedSizeError",
]
