"""Shared exception types."""

from __future__ import annotations


class ResourceLimitError(RuntimeError):
    """A configured guard (node budget, input size, state count) was exceeded."""


class DimacsParseError(ValueError):
    """Malformed DIMACS input. Carries the 1-based offending line number."""

    def __init__(self, message: str, line_no: int | None = None) -> None:
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no
