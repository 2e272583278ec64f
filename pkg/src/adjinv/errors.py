"""Exception hierarchy shared by every module of the package."""


class AdjinvError(Exception):
    """Base class for all package errors."""


class InvalidSpec(AdjinvError, ValueError):
    """Unknown family, bad rank, or malformed algebra string."""


class MismatchedAlgebra(AdjinvError, ValueError):
    pass


class IndexOutOfRange(AdjinvError, IndexError):
    pass


class NotDominant(AdjinvError, ValueError):
    pass


class NotSelfDual(AdjinvError, ValueError):
    pass


class InternalNegativeMultiplicity(AdjinvError, AssertionError):
    """A decomposition that must be a true representation came out virtual."""


class NonIntegralCharacter(AdjinvError, ArithmeticError):
    pass


class SizeCapExceeded(AdjinvError, MemoryError):
    """A character computation would exceed the configured support cap."""
