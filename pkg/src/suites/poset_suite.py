# src/suites/poset_suite.py

from __future__ import annotations

from typing import Any, Dict, List, Optional

from loguru import logger

from src.suites import check_result, guarded, suite_report
from src.tools.coeff import LaurentPoly
from src.tools.grobner import verify_poset
from src.tools.qmatrix import aq_generators, multidegree, scale_action
from src.tools.weyl import (
    compose_all,
    coxeter_power,
    coxeter_power_word,
    hasse_edges,
    interval_below,
    length,
    longest,
    longest_rev,
    word_product,
)


def _coxeter_failures(m: int, n: int) -> List[Dict[str, Any]]:
    size = m + n
    cm = coxeter_power(size, m)
    failures: List[Dict[str, Any]] = []
    product = compose_all([longest(m, size), longest_rev(n, size), longest(size, size)])
    if product != cm:
        failures.append({"identity": "w°_m w°r_n w°_{m+n}", "got": str(product), "expected": str(cm)})
    if length(cm) != m * n:
        failures.append({"identity": "length", "got": length(cm), "expected": m * n})
    word = coxeter_power_word(m, n)
    if word_product(word, size) != cm or len(word) != m * n:
        failures.append({"identity": "reduced word", "word": word})
    return failures


def _torus_failures(m: int, n: int) -> List[Dict[str, Any]]:
    """Every generator of every A_q(y) is an eigenvector of each unit scaling."""
    failures: List[Dict[str, Any]] = []
    for y in interval_below(coxeter_power(m + n, m)):
        for g in aq_generators(y, m, n):
            deg = multidegree(g)
            if deg is None:
                failures.append({"y": str(y), "generator": str(g), "reason": "inhomogeneous"})
                continue
            for t in range(m + n):
                unit = [0] * (m + n)
                unit[t] = 1
                weight = deg.vector[t]
                if scale_action(unit, g) != g.scale(LaurentPoly.monomial(weight)):
                    failures.append({"y": str(y), "generator": str(g), "weight": unit})
    return failures


def run(m: int, n: int, degree_bound: Optional[int] = None) -> Dict[str, Any]:
    logger.info("poset suite {}x{}", m, n)
    checks: List[Dict[str, Any]] = [check_result("coxeter_identities", _coxeter_failures(m, n))]

    poset = guarded("poset", lambda: verify_poset(m, n, degree_bound))
    report: Dict[str, Any] = {}
    if poset["ok"]:
        report = poset.pop("value")
        checks.append(check_result("poset", report["failures"], distinct=report["distinct"]))
        elements = interval_below(coxeter_power(m + n, m))
        bruhat_edges = sorted((str(a), str(b)) for a, b in hasse_edges(elements))
        ideal_edges = [tuple(e) for e in report["ideal_hasse_edges"]]
        hasse_failures = [] if ideal_edges == bruhat_edges else [
            {"ideal_edges": ideal_edges, "bruhat_edges": bruhat_edges}
        ]
        checks.append(check_result("hasse_edges", hasse_failures, edges=len(bruhat_edges)))
    else:
        checks.append(poset)

    checks.append(check_result("torus_eigenvectors", _torus_failures(m, n)))
    return suite_report(
        "poset", m, n, checks,
        ideals=report.get("ideals", []),
        inclusion_matrix=report.get("inclusion_matrix", []),
        bruhat_matrix=report.get("bruhat_matrix", []),
    )
