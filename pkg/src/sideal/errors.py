"""Exception hierarchy shared across the package.

DomainError subclasses map to CLI exit code 1, ParseError to 2, and
ContractViolation to 3.
"""

from __future__ import annotations


class DomainError(ValueError):
    """A well-formed request that the mathematics rejects."""


class RingMismatch(DomainError):
    """Operands belong to different rings."""


class DisjointnessError(DomainError):
    """An ideal meets the multiplicative set where disjointness is required."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionError(DomainError):
    """An operation precondition is violated."""


class UnsupportedEnumeration(DomainError):
    """A finite enumeration was requested where none exists (e.g. the divisor
    lattice of the zero ideal in an infinite ring)."""


class CapacityError(DomainError):
    """An enumeration exceeds the configured caps."""


class ContractViolation(RuntimeError):
    """An internal invariant failed; indicates a bug, never bad input."""


class ParseError(ValueError):
    """Grammar error in a ring/ideal/multiplicative-set literal."""

    def __init__(self, message: str, position: int, expected: str | None = None):
        super().__init__(message)
        self.position = position
        self.expected = expected
