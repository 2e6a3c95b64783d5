# src/tools/__init__.py

from .errors import DegreeBoundExceeded, DomainError, InexactDivisionError, ToolkitError, VerificationError

__all__ = [
    "DegreeBoundExceeded",
    "DomainError",
    "InexactDivisionError",
    "ToolkitError",
    "VerificationError",
]
