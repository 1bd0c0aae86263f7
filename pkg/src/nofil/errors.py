"""Exception types shared across the package."""

from __future__ import annotations


class NofilError(Exception):
    """Base class for domain errors raised by this package."""

    code = "ERROR"


class OrderInvalid(NofilError):
    code = "ORDER_INVALID"


class ValidationError(NofilError):
    """A block list failed to form a Steiner triple system.

    ``violations`` holds every problem found, as ``(code, detail)`` pairs where
    code is one of PAIR_UNCOVERED, PAIR_DUPLICATED, BLOCK_MALFORMED.
    """

    code = "NOT_AN_STS"

    def __init__(self, message: str, violations=()):
        super().__init__(message)
        self.violations = list(violations)

    def pairs(self, code: str) -> set[frozenset[int]]:
        return {detail for c, detail in self.violations if c == code}


class ParseError(NofilError):
    code = "PARSE_ERROR"

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownName(NofilError):
    code = "UNKNOWN_NAME"


class IllegalMove(NofilError):
    code = "ILLEGAL_MOVE"


class FilledBlock(NofilError):
    code = "FILLED_BLOCK"


class BudgetExceeded(NofilError):
    code = "BUDGET_EXCEEDED"


class SizeLimit(NofilError):
    code = "SIZE_LIMIT"


class Infeasible(NofilError):
    code = "INFEASIBLE"


class Timeout(NofilError):
    code = "TIMEOUT"


class EmbeddingFailure(NofilError):
    """No split/seed combination produced a verified embedding."""

    code = "FAILURE"

    def __init__(self, message: str, diagnostics=()):
        super().__init__(message)
        self.diagnostics = list(diagnostics)
