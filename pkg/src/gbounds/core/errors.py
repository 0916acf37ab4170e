"""
Exception hierarchy for gbounds.

Every error raised on purpose by the library derives from GBoundsError so
callers (the CLI in particular) can map failures to stable exit codes.
"""

from typing import Any, Dict, Optional


class GBoundsError(Exception):
    """Base exception for all gbounds errors."""


class GraphFormatError(GBoundsError):
    """Raised when a graph6 string or an edge list cannot be parsed."""

    def __init__(
        self,
        message: str,
        offset: Optional[int] = None,
        line: Optional[int] = None,
    ):
        self.reason = message
        self.offset = offset
        self.line = line
        location = []
        if line is not None:
            location.append(f"line {line}")
        if offset is not None:
            location.append(f"byte {offset}")
        prefix = f"[{', '.join(location)}] " if location else ""
        super().__init__(f"{prefix}{message}")


class InvalidParameterError(GBoundsError):
    """Raised when a parameter lies outside the admissible range."""


class NotInGammaError(GBoundsError):
    """Raised when a graph is not connected, not non-complete, or has n < 3."""

    def __init__(self, proof: Any, message: Optional[str] = None):
        self.proof = proof
        super().__init__(message or f"graph is not in class Gamma: {proof}")


class NotBipartiteError(GBoundsError):
    """Raised when a bipartite-only bound receives an unsuitable graph."""


class OracleLimitError(GBoundsError):
    """Raised when an exact or exhaustive computation exceeds its limit."""

    def __init__(self, message: str, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"{message} (size {size} exceeds limit {limit})")


class RejectionCapError(GBoundsError):
    """Raised when rejection sampling into class Gamma gives up."""

    def __init__(self, message: str, attempts: int):
        self.attempts = attempts
        super().__init__(f"{message} after {attempts} attempts")


class InvariantViolationError(GBoundsError):
    """Raised when a guaranteed property or an oracle cross-check fails."""

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        self.witness = witness or {}
        super().__init__(message)
