# src/cli.py

"""
Command-line surface.

    enumerate   W^{<= c^m} with lengths and Hasse edges (json | dot | text)
    generators  the (k, I) table of A_q(y)
    verify      poset | demazure | rmatrix | poisson | all
    classify    leaf of a rational matrix
    pairing     one truncated R-matrix pairing

Exit codes: 0 pass, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Dict, List, Optional

from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from config import RunConfig, get_settings
from src.pipeline import configure_logging, run_command
from src.tools.errors import DomainError
from src.tools.poisson import RatMatrix
from src.tools.subsets import IndexSet
from src.tools.weyl import Perm

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmatrix-hprimes",
        description="Torus-invariant primes of quantum matrices and the Poisson stratification of M_{m,n}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def shape(p: argparse.ArgumentParser) -> None:
        p.add_argument("--m", type=int, default=2, help="number of rows")
        p.add_argument("--n", type=int, default=2, help="number of columns")

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["json", "dot", "text"], default="json")
        p.add_argument("--log-level", default=None, help="loguru level for stderr")

    p_enum = sub.add_parser("enumerate", help="list the Bruhat interval below c^m")
    shape(p_enum)
    common(p_enum)

    p_gen = sub.add_parser("generators", help="generator table of A_q(y)")
    shape(p_gen)
    p_gen.add_argument("--y", required=True, help="permutation in compact one-line form, e.g. 3412")
    common(p_gen)

    p_ver = sub.add_parser("verify", help="run verification suites")
    shape(p_ver)
    p_ver.add_argument("--suite", choices=["poset", "demazure", "rmatrix", "poisson", "all"], default="all")
    p_ver.add_argument("--seed", type=int, default=None)
    p_ver.add_argument("--samples", type=int, default=None, help="random rational samples")
    p_ver.add_argument("--degree-bound", type=int, default=None)
    common(p_ver)

    p_cls = sub.add_parser("classify", help="leaf S(y) containing a rational matrix")
    p_cls.add_argument("--matrix", required=True, help='JSON rows of rationals, e.g. [["1","1/2"],["0","3"]]')
    common(p_cls)

    p_pair = sub.add_parser("pairing", help="truncated R-matrix pairing for one (k, I)")
    shape(p_pair)
    p_pair.add_argument("--k", type=int, required=True)
    p_pair.add_argument("--index-set", required=True, help="comma separated, e.g. 1,3")
    common(p_pair)
    return parser


def _parse_index_set(text: str) -> IndexSet:
    try:
        items = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as err:
        raise DomainError(f"bad index set {text!r}") from err
    if len(set(items)) != len(items):
        raise DomainError(f"index set {text!r} repeats an element")
    return IndexSet.of(items)


def _parse_matrix(text: str) -> RatMatrix:
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as err:
        raise DomainError(f"--matrix is not valid JSON: {err}") from err
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) and r for r in rows):
        raise DomainError("--matrix must be a non-empty JSON array of non-empty rows")
    try:
        return RatMatrix.of(rows)
    except (ValueError, ZeroDivisionError) as err:
        raise DomainError(f"bad matrix entry: {err}") from err


# -------------------------------------------------------------------
# Rendering
# -------------------------------------------------------------------


def _table(title: str, columns: List[str], rows: List[List[Any]]) -> Table:
    table = Table(title=title)
    for col in columns:
        table.add_column(col)
    for row in rows:
        table.add_row(*[str(v) for v in row])
    return table


def render_text(report: Dict[str, Any], console: Console) -> None:
    command = report["command"]
    if command == "enumerate":
        console.print(_table(
            f"W^(<= {report['top']}) for {report['m']}x{report['n']}",
            ["y", "length"],
            [[e["y"], e["length"]] for e in report["elements"]],
        ))
        console.print(_table("Hasse edges", ["lower", "upper"], report["edges"]))
    elif command == "generators":
        console.print(_table(
            f"A_q({report['y']}) for {report['m']}x{report['n']}",
            ["k", "I", "rows", "cols", "quantum minor", "duplicate"],
            [[r["k"], r["I"], r["minor"]["rows"], r["minor"]["cols"], r["qminor"], r["duplicate"]]
             for r in report["rows"]],
        ))
    elif command == "classify":
        console.print(f"leaf: {report['leaf']} (length {report['length']})")
    elif command == "pairing":
        status = report.get("scalar_text", report.get("error"))
        console.print(_table("pairing", ["k", "I", "minor", "ok", "scalar"],
                             [[report["k"], report["I"], report["minor"], report["ok"], status]]))
    else:
        rows = []
        for suite, block in report["summary"].items():
            for check, ok in block["checks"].items():
                rows.append([suite, check, "pass" if ok else "FAIL"])
        console.print(_table(f"verify {report['m']}x{report['n']} (seed {report['seed']})",
                             ["suite", "check", "result"], rows))
        rmatrix = report["suites"].get("rmatrix")
        if rmatrix:
            console.print(_table("pairing scalars", ["k", "I", "scalar"],
                                 [[p["k"], p["I"], p.get("scalar_text", p.get("error"))]
                                  for p in rmatrix["pairings"]]))
    console.print("OK" if report["ok"] else "FAILED")


def emit(report: Dict[str, Any], fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "json":
        stream.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    elif fmt == "dot":
        if "dot" not in report:
            raise DomainError("--format dot is only available for enumerate")
        stream.write(report["dot"] + "\n")
    else:
        render_text(report, Console(file=stream, width=140, color_system=None))


# -------------------------------------------------------------------
# Entry point
# -------------------------------------------------------------------


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    settings = get_settings()
    configure_logging(args.log_level or settings.log_level)
    try:
        matrix = _parse_matrix(args.matrix) if args.command == "classify" else None
        m, n = matrix.shape if matrix is not None else (args.m, args.n)
        config = RunConfig.from_settings(
            settings,
            command=args.command,
            m=m,
            n=n,
            format=args.format,
            suite=getattr(args, "suite", None),
            seed=getattr(args, "seed", None),
            samples=getattr(args, "samples", None),
            degree_bound=getattr(args, "degree_bound", None),
        )
        if config.format == "dot" and config.command != "enumerate":
            raise DomainError("--format dot is only available for enumerate")
        y = Perm.parse(args.y) if args.command == "generators" else None
        index_set = _parse_index_set(args.index_set) if args.command == "pairing" else None
        report = run_command(config, y=y, matrix=matrix, k=getattr(args, "k", None), index_set=index_set)
        emit(report, config.format)
    except (DomainError, ValidationError) as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_USAGE
    return EXIT_OK if report["ok"] else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
