# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 locdom contributors. See LICENSE for full terms.
"""Command-line interface for locdom.

Every subcommand prints JSON (``--format json``) or an aligned table to
stdout; diagnostics go to stderr. Example:

```bash
locdom solve --family path --n 7 --kind SLD
locdom construct realize-ld-sld 2 4 --verify
locdom sweep labeled:5 --format json
```

Exit codes: 0 on success, 1 when a property is false, a theorem check
fails or a construction claim does not hold, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from pydantic import ValidationError

from locdom.engine.closed_forms import ClosedFormQuery, closed_form
from locdom.engine.codes import Code, CodeKind, Form, identifying_set, is_code
from locdom.engine.constructions import (
    ConstructionClaim,
    complement_gap,
    realize_ld_dld,
    realize_ld_sld,
    sperner_extremal,
    verify_claim,
)
from locdom.engine.families import FamilyTag, GraphFamily, generate
from locdom.engine.graph import Graph
from locdom.engine.graph6 import graph_key
from locdom.engine.harness import graph_parameters
from locdom.engine.loader import family_graph, load_graph, load_scenario
from locdom.engine.locator import simulate_scenario
from locdom.engine.schema import CliConfig, SolverSettings, SweepOptions
from locdom.engine.solvers import SolverMethod, minimum_code
from locdom.engine.sweep import resolve_source, sweep
from locdom.engine.trees import tree_gamma_dld, tree_gamma_sld
from locdom.exceptions import (
    DomainError,
    InvariantViolation,
    LocdomError,
)
from locdom.logging_config import set_log_level

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2

_KINDS = [k.value for k in CodeKind]


def _common_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=["json", "table"], default="table", help="Output format")
    p.add_argument("--cap", type=int, default=24, help="Exactness cap on n (default: 24)")
    p.add_argument(
        "--allow-over-cap", action="store_true", help="Run exact searches above the cap"
    )
    p.add_argument(
        "--log-level",
        default="WARNING",
        type=str.upper,
        help="Diagnostics level on stderr (default: WARNING)",
    )
    return p


def _graph_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", help="graph6 string, graph6 file or .edges file")
    p.add_argument("--family", help=f"Generated family: {', '.join(t.value for t in FamilyTag)}")
    p.add_argument("--n", type=int, help="Family size parameter")
    p.add_argument("--m", type=int, help="Second parameter of complete_bipartite and rook")
    p.add_argument("--sequence", help="Threshold creation sequence of i/u letters")


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="locdom", description="Exact locating-dominating code computations"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="Check a code on a graph")
    _graph_flags(p)
    p.add_argument("--code", required=True, help="Comma-separated codeword list, e.g. 1,3,5")
    p.add_argument("--kind", required=True, type=CodeKind.parse, help=f"One of {_KINDS}")
    p.add_argument(
        "--form",
        choices=[f.value for f in Form],
        default=Form.DEFINITION.value,
        help="Definition or characterization predicate",
    )

    p = sub.add_parser("solve", parents=[common], help="Minimum code of one kind")
    _graph_flags(p)
    p.add_argument("--kind", required=True, type=CodeKind.parse, help=f"One of {_KINDS}")
    p.add_argument(
        "--method",
        choices=["branch_and_bound", "exhaustive", "tree_linear"],
        default="branch_and_bound",
    )

    p = sub.add_parser("params", parents=[common], help="Full parameter table of a graph")
    _graph_flags(p)
    p.add_argument("--no-complement", action="store_true", help="Skip the complement solve")

    p = sub.add_parser("construct", parents=[common], help="Emit a construction with its claims")
    p.add_argument(
        "name",
        choices=["sperner-extremal", "complement-gap", "realize-ld-sld", "realize-ld-dld"],
    )
    p.add_argument("args", nargs="+", type=int, help="k, or a b")
    p.add_argument("--verify", action="store_true", help="Recompute every claim exactly")
    p.add_argument("--claims-out", help="Write the claims as JSON to this path")

    p = sub.add_parser("sweep", parents=[common], help="Theorem sweep over many graphs")
    p.add_argument("source", help="labeled:N, prufer:N, trees:N or a graph6 file")
    p.add_argument("--keep-going", action="store_true", help="Do not halt on the first failure")
    p.add_argument("--workers", type=int, default=1, help="Worker processes (default: 1)")
    p.add_argument("--ledger", help="Append counterexamples to this JSONL file")
    p.add_argument("--no-complement", action="store_true", help="Skip complement solves")

    p = sub.add_parser("simulate", parents=[common], help="Run a sensor scenario file")
    p.add_argument("scenario", help="Scenario .json or .yaml file")

    p = sub.add_parser("closed-form", parents=[common], help="Proved formula for a family")
    p.add_argument("family", choices=[t.value for t in FamilyTag])
    p.add_argument("rest", nargs="+", help="Family parameters followed by the code kind")
    p.add_argument("--check", action="store_true", help="Compare with the exact solver")
    return parser


def _config(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        command=args.command,
        output_format=args.format,
        solver=SolverSettings(exactness_cap=args.cap, allow_over_cap=args.allow_over_cap),
        workers=getattr(args, "workers", 1),
        keep_going=getattr(args, "keep_going", False),
        log_level=args.log_level,
    )


def _graph(args: argparse.Namespace) -> Graph:
    if args.family:
        if args.graph:
            raise DomainError("give either a graph or --family, not both")
        return family_graph(args.family, args.n, args.m, args.sequence)
    if not args.graph:
        raise DomainError("a graph (graph6 string or file) or --family is required")
    return load_graph(args.graph)


def _cell(value: object) -> str:
    if isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value)
    if isinstance(value, dict):
        return " ".join(f"{k}={_cell(v)}" for k, v in value.items())
    return str(value)


def _table(rows: Sequence[tuple[str, object]]) -> str:
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k:<{width}}  {_cell(v)}" for k, v in rows)


def _emit(config: CliConfig, payload: object, table: str) -> None:
    if config.output_format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(table)


def _parse_code(text: str) -> Code:
    try:
        members = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise DomainError(f"--code must be comma-separated integers, got {text!r}") from None
    if not members:
        raise DomainError("--code needs at least one codeword")
    return Code.of(members)


def cmd_verify(args: argparse.Namespace, config: CliConfig) -> int:
    g = _graph(args)
    code = _parse_code(args.code)
    holds = is_code(g, code, args.kind, Form(args.form))
    isets = {str(u): sorted(identifying_set(g, code, u)) for u in range(g.n)}
    payload = {
        "kind": args.kind.value,
        "form": args.form,
        "code": code.sorted(),
        "holds": holds,
        "isets": isets,
    }
    rows = [("kind", args.kind.value), ("code", code.sorted()), ("holds", holds)]
    rows += [(f"I({u})", members or "-") for u, members in isets.items()]
    _emit(config, payload, _table(rows))
    return EXIT_OK if holds else EXIT_FALSE


def cmd_solve(args: argparse.Namespace, config: CliConfig) -> int:
    g = _graph(args)
    if args.method == "tree_linear":
        trees = {CodeKind.DLD: tree_gamma_dld, CodeKind.SLD: tree_gamma_sld}
        if args.kind not in trees:
            raise DomainError("tree_linear solves DLD and SLD only")
        result = trees[args.kind](g)
    else:
        result = minimum_code(
            g, args.kind, method=SolverMethod(args.method), settings=config.solver
        )
    payload = {"kind": args.kind.value, "n": g.n, **result.to_dict()}
    rows = [
        ("value", result.value),
        ("witness", result.witness.sorted()),
        ("method", result.method.value),
        ("nodes_explored", result.nodes_explored),
    ]
    _emit(config, payload, _table(rows))
    return EXIT_OK


def cmd_params(args: argparse.Namespace, config: CliConfig) -> int:
    g = _graph(args)
    params = graph_parameters(
        g, settings=config.solver, include_complement=not args.no_complement
    )
    payload = {"graph6": graph_key(g), "parameters": params}
    _emit(config, payload, _table([("graph6", graph_key(g)), *params.items()]))
    return EXIT_OK


def _claims(name: str, values: list[int]) -> list[ConstructionClaim]:
    arity = 1 if name in ("sperner-extremal", "complement-gap") else 2
    if len(values) != arity:
        raise DomainError(f"{name} takes {arity} integer argument(s), got {len(values)}")
    if name == "sperner-extremal":
        return [sperner_extremal(values[0])]
    if name == "complement-gap":
        return list(complement_gap(values[0]))
    if name == "realize-ld-sld":
        return [realize_ld_sld(*values)]
    return [realize_ld_dld(*values)]


def cmd_construct(args: argparse.Namespace, config: CliConfig) -> int:
    claims = _claims(args.name, args.args)
    checked = [verify_claim(c, config.solver) for c in claims] if args.verify else []
    entries = [c.to_dict() for c in claims]
    for entry, verification in zip(entries, checked):
        entry["verification"] = verification.to_dict()
    if args.claims_out:
        Path(args.claims_out).write_text(
            json.dumps([c.to_dict() for c in claims], sort_keys=True, indent=2) + "\n",
            encoding="utf-8",
        )
    rows: list[tuple[str, object]] = []
    for i, claim in enumerate(claims):
        rows.append((claim.name, graph_key(claim.graph)))
        rows.append(("claims", {p.value: v for p, v in claim.claims}))
        if checked:
            rows.append(("verified", checked[i].ok))
    _emit(config, entries, _table(rows))
    return EXIT_OK if all(v.ok for v in checked) else EXIT_FALSE


def cmd_sweep(args: argparse.Namespace, config: CliConfig) -> int:
    options = SweepOptions(
        keep_going=config.keep_going,
        workers=config.workers,
        include_complement=not args.no_complement,
        ledger_path=args.ledger,
        solver=config.solver,
    )
    report = sweep(resolve_source(args.source), options)
    _emit(config, report.to_dict(), report.to_table())
    return EXIT_OK if report.passed else EXIT_FALSE


def cmd_simulate(args: argparse.Namespace, config: CliConfig) -> int:
    result = simulate_scenario(load_scenario(args.scenario))
    payload = result.to_dict()
    _emit(config, payload, _table(list(payload.items())))
    return EXIT_OK


def cmd_closed_form(args: argparse.Namespace, config: CliConfig) -> int:
    *raw, kind_text = args.rest
    if not raw:
        raise DomainError("closed-form needs family parameters before the kind")
    try:
        params = tuple(int(p) for p in raw)
    except ValueError:
        raise DomainError(f"family parameters must be integers, got {raw}") from None
    kind = CodeKind.parse(kind_text)
    value = closed_form(ClosedFormQuery(FamilyTag(args.family), params, kind))
    payload: dict[str, object] = {
        "family": args.family,
        "params": list(params),
        "kind": kind.value,
        "value": value,
    }
    status = EXIT_OK
    if args.check:
        g = generate(GraphFamily.of(args.family, *params))
        solved = minimum_code(g, kind, settings=config.solver).value
        payload["solver_value"] = solved
        status = EXIT_OK if solved == value else EXIT_FALSE
    _emit(config, payload, _table(list(payload.items())))
    return status


COMMANDS: dict[str, Callable[[argparse.Namespace, CliConfig], int]] = {
    "verify": cmd_verify,
    "solve": cmd_solve,
    "params": cmd_params,
    "construct": cmd_construct,
    "sweep": cmd_sweep,
    "simulate": cmd_simulate,
    "closed-form": cmd_closed_form,
}


def _error(message: str) -> None:
    print(f"locdom: error: {message}", file=sys.stderr)


def run(argv: Sequence[str] | None = None) -> int:
    """Parse *argv*, run the subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        config = _config(args)
    except ValidationError as exc:
        first = exc.errors()[0]
        _error(f"--{'.'.join(str(p) for p in first['loc'])}: {first['msg']}")
        return EXIT_USAGE
    set_log_level(config.log_level)
    try:
        return COMMANDS[args.command](args, config)
    except InvariantViolation as exc:
        _error(f"internal check failed: {exc}")
        return EXIT_FALSE
    except LocdomError as exc:
        _error(str(exc))
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
