# src/pipeline.py

"""
Orchestration of runs: one function per command, each returning a plain
dict report. Reports carry a "summary" block and an "ok" flag; rendering is
left to src/cli.py.
"""

from __future__ import annotations

import sys
from typing import Any, Dict, List, Optional

from loguru import logger

from config import RunConfig
from src.suites import demazure_suite, poisson_suite, poset_suite, rmatrix_suite
from src.suites.rmatrix_suite import pairing_row
from src.tools.poisson import RatMatrix, leaf_of
from src.tools.qmatrix import aq_generator_table
from src.tools.subsets import IndexSet
from src.tools.weyl import Perm, coxeter_power, hasse_dot, hasse_edges, interval_below, length

SUITES = ("poset", "demazure", "rmatrix", "poisson")


def configure_logging(level: str = "WARNING") -> None:
    """Log to stderr only; stdout is reserved for reports."""
    logger.remove()
    logger.add(sys.stderr, level=level.upper(), format="{time:HH:mm:ss} | {level: <7} | {message}")


# -------------------------------------------------------------------
# Commands
# -------------------------------------------------------------------


def enumerate_report(config: RunConfig) -> Dict[str, Any]:
    """W^{<= c^m} with lengths and Hasse edges."""
    cm = coxeter_power(config.m + config.n, config.m)
    elements = interval_below(cm)
    edges = hasse_edges(elements)
    return {
        "command": "enumerate",
        "m": config.m,
        "n": config.n,
        "top": str(cm),
        "elements": [{"y": str(y), "length": length(y)} for y in elements],
        "edges": [[str(a), str(b)] for a, b in edges],
        "dot": hasse_dot(elements, name=f"bruhat_{config.m}x{config.n}"),
        "summary": {"elements": len(elements), "edges": len(edges)},
        "ok": True,
    }


def generators_report(config: RunConfig, y: Perm) -> Dict[str, Any]:
    rows = aq_generator_table(y, config.m, config.n)
    distinct = sum(1 for r in rows if not r["duplicate"])
    return {
        "command": "generators",
        "m": config.m,
        "n": config.n,
        "y": str(y),
        "rows": rows,
        "summary": {"rows": len(rows), "distinct_minors": distinct},
        "ok": True,
    }


def classify_report(matrix: RatMatrix) -> Dict[str, Any]:
    leaf = leaf_of(matrix)
    return {
        "command": "classify",
        "matrix": matrix.to_json(),
        "leaf": str(leaf),
        "length": length(leaf),
        "summary": {"leaf": str(leaf)},
        "ok": True,
    }


def pairing_report(config: RunConfig, k: int, index_set: IndexSet) -> Dict[str, Any]:
    row = pairing_row(config.m, config.n, k, index_set)
    return {"command": "pairing", "m": config.m, "n": config.n, **row,
            "summary": {"ok": row["ok"]}}


def run_verification(config: RunConfig) -> Dict[str, Any]:
    """Run the selected suite(s) in a fixed order and assemble one report."""
    selected: List[str] = list(SUITES) if config.suite == "all" else [config.suite]
    reports: Dict[str, Any] = {}
    for name in selected:
        logger.info("running suite {} on {}x{}", name, config.m, config.n)
        if name == "poset":
            reports[name] = poset_suite.run(config.m, config.n, config.degree_bound)
        elif name == "demazure":
            reports[name] = demazure_suite.run(config.m, config.n)
        elif name == "rmatrix":
            reports[name] = rmatrix_suite.run(config.m, config.n)
        else:
            reports[name] = poisson_suite.run(config.m, config.n, config.seed, config.samples, config.torus_trials)

    summary = {
        name: {
            "ok": rep["ok"],
            "checks": {c["name"]: c["ok"] for c in rep["checks"]},
        }
        for name, rep in reports.items()
    }
    ok = all(rep["ok"] for rep in reports.values())
    if not ok:
        logger.error("verification failed: {}", [n for n, s in summary.items() if not s["ok"]])
    return {
        "command": "verify",
        "m": config.m,
        "n": config.n,
        "seed": config.seed,
        "suites": reports,
        "summary": summary,
        "ok": ok,
    }


def run_command(config: RunConfig, y: Optional[Perm] = None, matrix: Optional[RatMatrix] = None,
                k: Optional[int] = None, index_set: Optional[IndexSet] = None) -> Dict[str, Any]:
    if config.command == "enumerate":
        return enumerate_report(config)
    if config.command == "generators":
        return generators_report(config, y)
    if config.command == "classify":
        return classify_report(matrix)
    if config.command == "pairing":
        return pairing_report(config, k, index_set)
    return run_verification(config)
