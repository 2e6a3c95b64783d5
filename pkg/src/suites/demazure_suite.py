# src/suites/demazure_suite.py

from __future__ import annotations

from typing import Any, Dict, List

from loguru import logger

from src.suites import check_result, suite_report
from src.tools.demazure import (
    check_lower_recursion,
    check_nilpotence,
    check_product_rules,
    check_raise_recursion,
    ortho_complement_indices,
)
from src.tools.errors import VerificationError
from src.tools.weyl import coxeter_power, interval_below


def _complement_rows(m: int, n: int) -> Dict[str, Any]:
    size = m + n
    cm = coxeter_power(size, m)
    rows: List[Dict[str, Any]] = []
    failures: List[Any] = []
    for y in interval_below(cm):
        for k in range(1, size):
            try:
                found = ortho_complement_indices(cm, y, k)
            except VerificationError as err:
                failures.append({"error": str(err), "witness": err.witness})
                continue
            rows.append({"y": str(y), "k": k, "complement": [s.to_json() for s in found]})
    return check_result("ortho_complement", failures, rows=rows)


def run(m: int, n: int) -> Dict[str, Any]:
    size = m + n
    logger.info("demazure suite {}x{} (N = {})", m, n, size)
    checks = [
        _complement_rows(m, n),
        check_result("raise_recursion", check_raise_recursion(size)),
        check_result("lower_recursion", check_lower_recursion(size)),
        check_result("nilpotence", check_nilpotence(size)),
        check_result("product_rules", check_product_rules(size)),
    ]
    return suite_report("demazure", m, n, checks)
