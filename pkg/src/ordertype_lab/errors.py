"""Exception types shared across the package."""


class OrderTypeLabError(Exception):
    """Base class for all errors raised by this package."""


class NotGeneralPosition(OrderTypeLabError):
    """A configuration violates its general-position rule.

    ``witness`` holds an offending index triple when one is known.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAffine(OrderTypeLabError):
    """A point set is not contained in an open hemisphere."""


class DegenerateAnchor(OrderTypeLabError):
    """Two anchor directions are equal or antipodal."""


class SizeMismatch(OrderTypeLabError):
    """Operands have incompatible sizes."""


class NotSimple(OrderTypeLabError):
    """A chirotope contains a zero sign."""


class TooSmall(OrderTypeLabError):
    """A configuration is below the minimum size for an operation."""


class TrivialGroup(OrderTypeLabError):
    """An operation requires a non-trivial symmetry group."""


class PoleCountViolation(OrderTypeLabError):
    """A non-trivial symmetry did not yield exactly two antipodal poles."""


class UnclassifiableGroup(OrderTypeLabError):
    """A symmetry group fits no class of the finite-rotation-group table."""


class UnknownName(OrderTypeLabError):
    """No construction registered under the requested name."""


class ConstructionDegenerate(OrderTypeLabError):
    """A named construction failed its own validity checks."""


class SupportTooLarge(OrderTypeLabError):
    """The labeled-order-type support is too large to enumerate."""


class RetriesExhausted(OrderTypeLabError):
    """A randomized draw kept failing its validity check."""


class ParseError(OrderTypeLabError):
    """Malformed input file."""


class UnknownSuite(OrderTypeLabError):
    """Unknown verification suite name."""
