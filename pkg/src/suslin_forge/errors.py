"""Exception types shared across the package."""


class SuslinForgeError(Exception):
    """Base class for every error raised by this package."""


class RingMismatchError(SuslinForgeError, ValueError):
    """Operands live in different coefficient rings."""


class DescriptorError(SuslinForgeError, ValueError):
    """A ring descriptor is malformed or violates the nesting rules."""


class NotEnumerableError(SuslinForgeError, ValueError):
    pass


class BudgetExceededError(SuslinForgeError, RuntimeError):
    pass


class PreconditionError(SuslinForgeError, ValueError):
    """An operation was called on data outside its documented domain."""


class InconsistencyError(SuslinForgeError, AssertionError):
    """An internal identity failed; this always indicates a bug."""
