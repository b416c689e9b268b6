"""Exceptions raised by anc_sieve.

Every error derives from `AncSieveError` so callers (the CLI in particular) can
separate domain failures from programming errors. Most also derive from
`ValueError` or `ArithmeticError` so existing ``except ValueError`` handlers
keep working.
"""
from typing import Any


class AncSieveError(Exception):
    """Base class for anc_sieve errors."""


class DivisionWithRemainder(AncSieveError, ArithmeticError):
    """An exact division left a nonzero remainder.

    Attributes:
        dividend: the value being divided
        divisor: the value divided by
        remainder: the nonzero remainder
    """

    def __init__(self, dividend: Any, divisor: Any, remainder: Any):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(
            f"Division of {dividend} by {divisor} is not exact: remainder {remainder}"
        )


class NotPrimitiveRoot(AncSieveError, ValueError):
    """Exponent j does not give a primitive d-th root of unity (gcd(j, d) != 1)."""


class PartitionError(AncSieveError, ValueError):
    """Malformed partition, wrong number of parts, or failed divisibility."""


class ProfileError(AncSieveError, ValueError):
    """Inconsistent cycle profile or counting parameters."""


class NegativeExponentError(ProfileError):
    """A q-exponent evaluated to a negative integer."""


class ParityError(AncSieveError, ValueError):
    """Parity precondition for matchings or type-B objects failed."""


class BoundExceeded(AncSieveError, ValueError):
    """Enumeration requested above the configured size bound."""


class PreconditionError(AncSieveError, ValueError):
    """Operation called outside its documented preconditions."""


class CycleNotationError(AncSieveError, ValueError):
    """Cycle notation text could not be parsed into a permutation."""
