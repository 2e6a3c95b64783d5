# src/suites/poisson_suite.py

from __future__ import annotations

from typing import Any, Dict, List

import numpy as np
from loguru import logger

from src.suites import check_result, guarded, suite_report
from src.tools.poisson import (
    a_generators,
    check_antisymmetry,
    check_jacobi,
    check_semiclassical,
    leaf_of,
    poisson_ideal_check,
    torus_scale,
    verify_stratification,
)
from src.tools.qmatrix import aq_generators, specialize_q1
from src.tools.sampling import SampleSpec, random_matrices, random_torus, stratification_samples
from src.tools.weyl import coxeter_power, interval_below


def _specialization_failures(m: int, n: int) -> List[Dict[str, Any]]:
    failures = []
    for y in interval_below(coxeter_power(m + n, m)):
        classical = set(a_generators(y, m, n))
        shadow = {specialize_q1(g) for g in aq_generators(y, m, n)}
        if classical != shadow:
            failures.append({"y": str(y),
                             "classical": sorted(str(g) for g in classical),
                             "specialized": sorted(str(g) for g in shadow)})
    return failures


def _poisson_ideal_failures(m: int, n: int) -> List[Dict[str, Any]]:
    return [
        {"y": str(y)}
        for y in interval_below(coxeter_power(m + n, m))
        if not poisson_ideal_check(y, m, n)
    ]


def _torus_failures(m: int, n: int, seed: int, trials: int) -> List[Dict[str, Any]]:
    rng = np.random.default_rng(seed + 1)
    points = random_matrices(SampleSpec(m, n, trials, seed + 2))
    failures = []
    for x in points:
        left, right = random_torus(rng, m, n)
        scaled = torus_scale(x, left, right)
        if leaf_of(scaled) != leaf_of(x):
            failures.append({"x": x.to_json(), "A": [str(v) for v in left], "B": [str(v) for v in right],
                             "leaf": str(leaf_of(x)), "scaled_leaf": str(leaf_of(scaled))})
    return failures


def run(m: int, n: int, seed: int, samples: int, torus_trials: int) -> Dict[str, Any]:
    logger.info("poisson suite {}x{} (seed {}, {} samples)", m, n, seed, samples)
    checks = [
        check_result("antisymmetry", check_antisymmetry(m, n)),
        check_result("jacobi", check_jacobi(m, n)),
        check_result("semiclassical", check_semiclassical(m, n)),
        check_result("specialization", _specialization_failures(m, n)),
        check_result("poisson_ideals", _poisson_ideal_failures(m, n)),
    ]
    strat = guarded("stratification",
                    lambda: verify_stratification(m, n, stratification_samples(m, n, samples, seed)))
    census: Dict[str, int] = {}
    if strat["ok"]:
        report = strat.pop("value")
        census = report["census"]
        strat = check_result("stratification", report["failures"], samples=report["samples"])
    checks.append(strat)
    checks.append(check_result("torus_invariance", _torus_failures(m, n, seed, torus_trials),
                               trials=torus_trials))
    return suite_report("poisson", m, n, checks, seed=seed, census=census)
