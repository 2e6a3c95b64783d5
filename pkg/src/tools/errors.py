# src/tools/errors.py

from __future__ import annotations

from typing import Any, Optional


class ToolkitError(Exception):
    """Base class for every error raised by the toolkit."""


class DomainError(ToolkitError, ValueError):
    """An operation was called outside its domain (bad sizes, y not below c^m, ...)."""


class InexactDivisionError(ToolkitError, ArithmeticError):
    """A division that must be exact left a remainder."""


class DegreeBoundExceeded(ToolkitError):
    """Groebner completion produced an element above the explicit degree bound."""

    def __init__(self, degree: int, bound: int) -> None:
        super().__init__(
            f"Groebner completion reached degree {degree}, above the bound {bound}."
        )
        self.degree = degree
        self.bound = bound


class VerificationError(ToolkitError, AssertionError):
    """
    A machine check failed.

    `witness` is a JSON-friendly object describing the counterexample; suites
    copy it verbatim into their reports.
    """

    def __init__(self, message: str, witness: Optional[Any] = None) -> None:
        super().__init__(message)
        self.witness = witness
