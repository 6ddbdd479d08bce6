"""Domain errors shared across the package.

Every error that reflects a violated precondition (rather than a bug)
derives from DomainError so front ends can map them to a diagnostic and
a stable exit code.
"""

from __future__ import annotations


class DomainError(Exception):
    """Base class for all precondition / domain failures."""


class ParseError(DomainError):
    """Set-expression syntax error; carries the offending offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class NotPeriodic(DomainError):
    """Expression uses a predicate with no eventually periodic value."""


class NoRotation(DomainError):
    """Requested a density-realizing rotation of an empty pattern."""


class NotADivisor(DomainError):
    """Depth reduction target does not divide the current modulus."""


class IncompatibleLift(DomainError):
    """Lifted residue disagrees with the current residue."""


class DepthMismatch(DomainError):
    """Binary point operation applied at unequal depths."""


class InsufficientDepth(DomainError):
    """Set period does not divide the point's modulus."""


class InconsistentDiff(DomainError):
    """Pair point difference tag contradicts the component residues."""


class PreconditionViolated(DomainError):
    """Stated operation precondition does not hold for the input."""


class NotFound(DomainError):
    """Exhaustive search ended without a witness."""


class FixedPointPresent(DomainError):
    """Functional graph has f(i) = i somewhere."""


class TooManyCoefficients(DomainError):
    """Coefficient list exceeds the subset-sum enumeration guard."""


class BudgetExceeded(DomainError):
    """Coloring enumeration would exceed the configured budget."""


class TooLarge(DomainError):
    """Input exceeds a hard enumeration size guard."""
