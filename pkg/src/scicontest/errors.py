"""Coded errors shared by every layer.

All recoverable failures carry a stable machine-readable code; the HTTP
layer maps codes onto the uniform {code, message, details} envelope.
"""

from __future__ import annotations

from typing import Any


class ContestError(Exception):
    """Domain failure with a stable error code.

    ``details`` is optional structured context (offending ids, limits, ...)
    that survives into API responses and logs.
    """

    def __init__(self, code: str, message: str, details: Any = None):
        super().__init__(message)
        self.code = code
        self.message = message
        self.details = details

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"ContestError({self.code!r}, {self.message!r})"


class ConfigError(ContestError):
    """Invalid contest configuration; ``details`` lists every violation."""

    def __init__(self, problems: list[str]):
        super().__init__("INVALID_CONFIG", "; ".join(problems), details=problems)
        self.problems = problems
