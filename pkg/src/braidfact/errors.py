"""Typed errors shared across the package."""

from __future__ import annotations


class BraidFactError(Exception):
    """Base class for all package errors."""


class StrandMismatch(BraidFactError, ValueError):
    """Two operands live in braid groups on different strand counts."""


class UnverifiedFactorization(BraidFactError, ValueError):
    """An operation that needs a full-twist factorization got something else."""


class NegativeGenus(BraidFactError, ValueError):
    """Singularity counts exceed what the degree allows."""


class DegenerateDegree(BraidFactError, ValueError):
    """A sheet or strand count too small for the requested construction."""


class OrbitBoundExceeded(BraidFactError, ValueError):
    """An exact orbit walk was asked for above its configured size bound."""


class ParseError(BraidFactError, ValueError):
    """A text input failed to parse.

    Carries the 1-based line and column of the offending token when known.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            message = f"{where}: {message}"
        super().__init__(message)


class RhoOutOfRange(ParseError):
    """A local exponent was not 1, 2 or 3."""
