"""Command-line front end: single queries, sweeps, and the self-test suite.

Three subcommands:

  compute --ambient N --degree k --insertions a1,a2,... [--engine E]
          [--mirror] [--json]
      Evaluate one query.  --engine picks residue, schubert, or both
      (default both; the residue value is always computed since it is
      the reference).  --mirror adds the two-point mirror decomposition
      to the output (two insertions only).

  sweep --ambient-min A --ambient-max B (--calabi-yau | --degree k)
        --points n [--json]
      Evaluate every dimension-valid insertion multiset of length n for
      each ambient dimension in the range, running both engines.
      --calabi-yau sets the hypersurface degree equal to the ambient
      dimension at every step.

  selftest
      Run the built-in consistency suite and report one line per check.

Exit codes: 0 success, 2 malformed input (one-line diagnostic on
stderr), 3 when both engines ran and disagreed anywhere, 1 for selftest
failures.  JSON output is deterministic, and all big integers are
decimal strings so values survive any JSON parser unharmed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .invariants import (
    InvalidQueryError,
    InvariantQuery,
    InvariantReport,
    QueryError,
    compute,
    sweep,
)
from .selfcheck import DEFAULT_SEED, run_all

ENGINES = ("residue", "schubert", "both")


class _Parser(argparse.ArgumentParser):
    """argparse with the two-line usage+error replaced by one diagnostic."""

    def error(self, message: str):
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


@dataclass(frozen=True)
class CliConfig:
    """Parsed and validated command line."""

    command: str
    ambient: int | None = None
    degree: int | None = None
    insertions: tuple[int, ...] | None = None
    engine: str = "both"
    output: str = "table"
    mirror: bool = False
    ambient_min: int | None = None
    ambient_max: int | None = None
    points: int | None = None
    calabi_yau: bool = False


def _insertion_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def _build_parser() -> _Parser:
    parser = _Parser(prog="gwlines", description="Exact line counts on projective hypersurfaces")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    one = commands.add_parser("compute", help="evaluate a single query")
    one.add_argument("--ambient", type=int, required=True, metavar="N",
                     help="ambient projective space CP^(N-1)")
    one.add_argument("--degree", type=int, required=True, metavar="K",
                     help="hypersurface degree")
    one.add_argument("--insertions", type=_insertion_list, required=True, metavar="A1,A2,...",
                     help="comma-separated insertion powers")
    one.add_argument("--engine", choices=ENGINES, default="both",
                     help="which engine(s) to run (default: both)")
    one.add_argument("--mirror", action="store_true",
                     help="include the two-point mirror decomposition")
    one.add_argument("--json", action="store_true", help="emit JSON instead of a table")

    many = commands.add_parser("sweep", help="evaluate a batch of queries")
    many.add_argument("--ambient-min", type=int, required=True, metavar="N")
    many.add_argument("--ambient-max", type=int, required=True, metavar="N")
    rule = many.add_mutually_exclusive_group(required=True)
    rule.add_argument("--calabi-yau", action="store_true",
                      help="set the degree equal to the ambient dimension")
    rule.add_argument("--degree", type=int, metavar="K", help="fixed hypersurface degree")
    many.add_argument("--points", type=int, required=True, metavar="COUNT",
                      help="number of insertions per query")
    many.add_argument("--json", action="store_true", help="emit JSON instead of a table")

    commands.add_parser("selftest", help="run the built-in consistency suite")
    return parser


def parse_args(argv: Sequence[str] | None = None) -> CliConfig:
    """Parse and validate; SystemExit(2) with one diagnostic line on bad input."""
    parser = _build_parser()
    ns = parser.parse_args(argv)
    if ns.command == "compute":
        try:
            InvariantQuery(ns.ambient, ns.degree, ns.insertions)
        except InvalidQueryError as exc:
            parser.error(str(exc))
        return CliConfig(
            command="compute",
            ambient=ns.ambient,
            degree=ns.degree,
            insertions=ns.insertions,
            engine=ns.engine,
            output="json" if ns.json else "table",
            mirror=ns.mirror,
        )
    if ns.command == "sweep":
        if ns.ambient_min < 2:
            parser.error(f"--ambient-min must be at least 2, got {ns.ambient_min}")
        if ns.ambient_max < ns.ambient_min:
            parser.error("--ambient-max must not be smaller than --ambient-min")
        if not ns.calabi_yau and ns.degree < 1:
            parser.error(f"--degree must be at least 1, got {ns.degree}")
        if ns.points < 1:
            parser.error(f"--points must be at least 1, got {ns.points}")
        return CliConfig(
            command="sweep",
            degree=None if ns.calabi_yau else ns.degree,
            output="json" if ns.json else "table",
            ambient_min=ns.ambient_min,
            ambient_max=ns.ambient_max,
            points=ns.points,
            calabi_yau=ns.calabi_yau,
        )
    return CliConfig(command="selftest")


def _mirror_dict(report: InvariantReport) -> dict | None:
    if report.mirror is None:
        return None
    return {
        "w_ab": str(report.mirror.w_ab),
        "w_total": str(report.mirror.w_total),
        "difference": str(report.mirror.difference),
    }


def _report_dict(report: InvariantReport, include_mirror: bool) -> dict:
    return {
        "ambient_dim": report.query.ambient,
        "hypersurface_degree": report.query.degree,
        "insertions": list(report.query.insertions),
        "dimension_ok": report.dimension_ok,
        "residue_value": str(report.residue_value),
        "schubert_value": None if report.schubert_value is None else str(report.schubert_value),
        "engines_agree": report.engines_agree,
        "mirror": _mirror_dict(report) if include_mirror else None,
    }


def _error_dict(entry: QueryError) -> dict:
    return {
        "ambient_dim": entry.ambient,
        "hypersurface_degree": entry.degree,
        "insertions": list(entry.insertions),
        "error": entry.message,
    }


def _report_line(report: InvariantReport, include_mirror: bool) -> str:
    q = report.query
    parts = [
        f"N={q.ambient}",
        f"k={q.degree}",
        f"insertions={list(q.insertions)}",
        f"dimension={'ok' if report.dimension_ok else 'off'}",
        f"residue={report.residue_value}",
    ]
    if report.schubert_value is not None:
        parts.append(f"schubert={report.schubert_value}")
        parts.append(f"agree={'yes' if report.engines_agree else 'no'}")
    if include_mirror and report.mirror is not None:
        parts.append(
            f"mirror: w_ab={report.mirror.w_ab}"
            f" w_total={report.mirror.w_total}"
            f" difference={report.mirror.difference}"
        )
    return " ".join(parts)


def _error_line(entry: QueryError) -> str:
    return (
        f"invalid: N={entry.ambient} k={entry.degree}"
        f" insertions={list(entry.insertions)} ({entry.message})"
    )


def _run_compute(config: CliConfig) -> int:
    try:
        query = InvariantQuery(config.ambient, config.degree, config.insertions)
    except InvalidQueryError as exc:
        print(f"gwlines: error: {exc}", file=sys.stderr)
        return 2
    report = compute(query, run_schubert=config.engine in ("schubert", "both"))
    include_mirror = config.mirror and report.mirror is not None
    if config.output == "json":
        print(json.dumps(_report_dict(report, include_mirror), indent=2))
    else:
        print(_report_line(report, include_mirror))
    if config.engine == "both" and report.engines_agree is False:
        return 3
    return 0


def _run_sweep(config: CliConfig) -> int:
    results = sweep(
        range(config.ambient_min, config.ambient_max + 1),
        degree=config.degree,
        points=config.points,
        run_schubert=True,
    )
    if config.output == "json":
        payload = [
            _error_dict(entry) if isinstance(entry, QueryError) else _report_dict(entry, True)
            for entry in results
        ]
        print(json.dumps(payload, indent=2))
    else:
        for entry in results:
            if isinstance(entry, QueryError):
                print(_error_line(entry))
            else:
                print(_report_line(entry, True))
    disagreement = any(
        isinstance(entry, InvariantReport) and entry.engines_agree is False for entry in results
    )
    return 3 if disagreement else 0


def _run_selftest() -> int:
    results = run_all(DEFAULT_SEED)
    for result in results:
        status = "ok" if result.ok else "FAIL"
        print(f"{result.name}: {status} ({result.detail})")
    failed = sum(1 for result in results if not result.ok)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def run(config: CliConfig) -> int:
    """Execute a validated configuration; returns the process exit code."""
    if config.command == "compute":
        return _run_compute(config)
    if config.command == "sweep":
        return _run_sweep(config)
    if config.command == "selftest":
        return _run_selftest()
    raise ValueError(f"unknown command {config.command!r}")


def main(argv: Sequence[str] | None = None) -> None:
    raise SystemExit(run(parse_args(argv)))
