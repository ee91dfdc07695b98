"""Exception types shared across the package."""


class WeylMdsError(Exception):
    """Base class for every error raised by this package."""


class UnsupportedFamily(WeylMdsError):
    """The requested family is outside the supported list."""


class InvalidRank(WeylMdsError):
    """The rank is not valid for the requested family."""


class DimensionMismatch(WeylMdsError):
    """A vector has the wrong length for the ambient root system."""


class NotAPositiveRoot(WeylMdsError):
    """The given vector is not a positive root of the system."""


class NonDominantWeight(WeylMdsError):
    """A dominant weight was required."""


class NonStrictlyDominant(WeylMdsError):
    """A strictly dominant weight (all coordinates positive) was required."""


class IndexOutOfRange(WeylMdsError):
    """A simple-root index is outside 1..rank."""


class NotReduced(WeylMdsError):
    """The given word is not a reduced expression."""


class GroupTooLarge(WeylMdsError):
    """Full group enumeration would exceed the configured cap."""


class OrbitTooLarge(WeylMdsError):
    """A weight-orbit walk exceeded the configured cap."""


class ExchangeClassTooLarge(WeylMdsError):
    """Materializing the commutation class would exceed the cap."""


class NotBraidless(WeylMdsError):
    """The fundamental weight is not braidless, so the coset atlas is undefined."""


class NotAPrefixSet(WeylMdsError):
    """The index set is not a member of the prefix family."""


class InfeasibleEntries(WeylMdsError):
    """The entries violate the cone or polytope inequalities."""


class NotStable(WeylMdsError):
    """A stable pattern was required."""


class ContextInvalid(WeylMdsError):
    """The arithmetic context (p, n) is inconsistent."""


class SumTooLarge(WeylMdsError):
    """A character sum would exceed the summation cap."""


class StabilityViolated(WeylMdsError):
    """n is below the stability threshold (or has the wrong parity)."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class UsageError(WeylMdsError):
    """Inconsistent command-line flags."""


class EncodeFailure(WeylMdsError):
    """Internal failure while peeling coset factors; signals a bug."""


class NonIntegralCoordinates(WeylMdsError):
    """Internal failure converting a weight to root coordinates; signals a bug."""


# Errors that indicate a broken invariant rather than bad input.
INTERNAL_ERRORS = (EncodeFailure, NonIntegralCoordinates)
