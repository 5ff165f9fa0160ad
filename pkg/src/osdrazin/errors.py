"""Exception types shared across the package."""


class OsdrazinError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatch(OsdrazinError):
    """Operands have incompatible matrix dimensions."""


class ScalarMismatch(OsdrazinError):
    """Operands live over different scalar rings."""


class UnsupportedRing(OsdrazinError):
    """Operation needs a field but the ring is not one (composite modulus)."""


class NotInvertible(OsdrazinError):
    """Matrix inverse requested but no inverse exists."""


class IndexTooLarge(OsdrazinError):
    """Group inverse requested for a matrix of Drazin index >= 2."""


class PreconditionFailure(OsdrazinError):
    """A construction was called with inputs that fail its hypothesis."""


class SingularResolvent(OsdrazinError):
    """A resolvent bracket that theory guarantees invertible was singular.

    Raising this signals an implementation bug, never an expected outcome.
    """


class BudgetExceeded(OsdrazinError):
    """An enumeration or campaign ran past its configured budget."""


class FormatError(OsdrazinError):
    """A matrix or instance document failed to parse."""
