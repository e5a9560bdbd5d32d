# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 locdom contributors. See LICENSE for full terms.

"""Pydantic models for solver settings, sweeps, scenarios and the CLI."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from locdom.engine.codes import CodeKind


class SolverSettings(BaseModel):
    """Limits applied to every exact search."""

    model_config = ConfigDict(frozen=True)

    exactness_cap: int = Field(
        default=24, ge=1, description="Largest vertex count solved without an explicit override"
    )
    allow_over_cap: bool = Field(
        default=False, description="Run exact searches above the cap anyway"
    )


class SweepOptions(BaseModel):
    """Options for a theorem sweep."""

    model_config = ConfigDict(frozen=True)

    keep_going: bool = Field(default=False, description="Continue after the first failure")
    workers: int = Field(default=1, ge=1, description="Worker processes for graph checks")
    include_complement: bool = Field(
        default=True, description="Solve the complement for the complement-pairing check"
    )
    ledger_path: str | None = Field(
        default=None, description="Append failing checks to this JSONL ledger"
    )
    solver: SolverSettings = Field(default_factory=SolverSettings)


class Scenario(BaseModel):
    """A locator simulation: graph, code, injected faults."""

    graph6: str = Field(..., min_length=1, description="graph6 record of the sensor network")
    code: list[int] = Field(..., min_length=1, description="Codeword vertices")
    faults: list[int] = Field(default_factory=list, description="Faulty vertices")
    decoding: CodeKind = Field(default=CodeKind.SLD, description="SLD or DLD decoding rule")

    @field_validator("decoding", mode="before")
    @classmethod
    def _decoder_kind(cls, value: object) -> object:
        kind = CodeKind(value.strip().upper()) if isinstance(value, str) else value
        if kind not in (CodeKind.SLD, CodeKind.DLD):
            raise ValueError("decoding must be SLD or DLD")
        return kind


class CliConfig(BaseModel):
    """Validated command-line flags."""

    model_config = ConfigDict(frozen=True)

    command: str
    output_format: Literal["json", "table"] = "table"
    solver: SolverSettings = Field(default_factory=SolverSettings)
    workers: int = Field(default=1, ge=1)
    keep_going: bool = False
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "WARNING"
