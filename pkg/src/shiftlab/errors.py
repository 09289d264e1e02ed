"""Exception hierarchy shared by all shiftlab modules."""


class ShiftLabError(Exception):
    """Base class for all errors raised by this package."""


class SchemaError(ShiftLabError):
    """A weight-sequence file or report failed structural validation.

    Carries a dotted field path (e.g. ``pattern.block[2]``) so the CLI can
    point at the offending part of the input.
    """

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class IndexOutOfSupport(ShiftLabError):
    """Requested index lies outside the window and no pattern extends there."""


class UnsupportedTermRule(ShiftLabError):
    """Series term rule is not in the supported catalog."""


class UnsupportedVectorSpec(ShiftLabError):
    """Vector specification is not finite-support and not from the catalog."""


class DimMismatch(ShiftLabError):
    """Operands have incompatible dimensions."""


class NoSolution(ShiftLabError):
    """No flip conjugation exists (modulus palindrome fails)."""


class NotCSelfadjoint(ShiftLabError):
    """Operation requires a verified C-selfadjoint input."""


class NumericalFailure(ShiftLabError):
    """A matrix factorization did not converge."""


class ProductOverflow(ShiftLabError):
    """Log-space evaluation still exceeds the representable range."""


class InvalidSpecCombination(ShiftLabError):
    """Sequence-rule pair violates the required convergence/divergence split."""
