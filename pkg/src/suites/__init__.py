# src/suites/__init__.py

"""Verification suites. Each module exposes run(...) -> report dict with an "ok" flag."""

from __future__ import annotations

from typing import Any, Callable, Dict, List

from loguru import logger

from src.tools.errors import DegreeBoundExceeded, VerificationError


def check_result(name: str, failures: List[Any], **extra: Any) -> Dict[str, Any]:
    """A named check: ok iff there are no failures."""
    if failures:
        logger.error("{} failed with {} witness(es)", name, len(failures))
    return {"name": name, "ok": not failures, "failures": failures, **extra}


def guarded(name: str, fn: Callable[[], Any]) -> Dict[str, Any]:
    """Run fn; a failed machine check or a hit degree bound becomes a failed check."""
    try:
        value = fn()
    except VerificationError as err:
        logger.error("{}: {}", name, err)
        return check_result(name, [{"error": str(err), "witness": err.witness}])
    except DegreeBoundExceeded as err:
        logger.error("{}: {}", name, err)
        return check_result(name, [{"error": str(err), "degree": err.degree, "bound": err.bound}])
    return check_result(name, [], value=value)


def suite_report(suite: str, m: int, n: int, checks: List[Dict[str, Any]], **extra: Any) -> Dict[str, Any]:
    return {
        "suite": suite,
        "m": m,
        "n": n,
        "checks": checks,
        "ok": all(c["ok"] for c in checks),
        **extra,
    }
