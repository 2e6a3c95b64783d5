# src/suites/rmatrix_suite.py

from __future__ import annotations

from typing import Any, Dict, List

from loguru import logger

from src.suites import check_result, suite_report
from src.tools.demazure import rmatrix_pairing
from src.tools.errors import VerificationError
from src.tools.subsets import IndexSet, admissible_pairs, minor_from_index


def pairing_row(m: int, n: int, k: int, index_set: IndexSet) -> Dict[str, Any]:
    spec = minor_from_index(m, n, k, index_set)
    row: Dict[str, Any] = {"k": k, "I": index_set.to_json(), "minor": spec.to_json()}
    try:
        _, scalar = rmatrix_pairing(m, n, k, index_set)
    except VerificationError as err:
        row.update({"ok": False, "error": str(err), "witness": err.witness})
        return row
    row.update({"ok": True, "scalar": scalar.to_json(), "scalar_text": str(scalar)})
    return row


def run(m: int, n: int) -> Dict[str, Any]:
    logger.info("rmatrix suite {}x{}", m, n)
    rows: List[Dict[str, Any]] = [pairing_row(m, n, k, i) for k, i in admissible_pairs(m, n)]
    failures = [r for r in rows if not r["ok"]]
    return suite_report("rmatrix", m, n, [check_result("pairing", failures, pairs=len(rows))], pairings=rows)
