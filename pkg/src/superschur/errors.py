"""Exception hierarchy shared by all modules."""


class SuperschurError(Exception):
    """Base class for errors raised by this package."""


class NotHookError(SuperschurError, ValueError):
    """The shape does not lie in the (k, l)-hook."""

    def __init__(self, shape, k, l):
        super().__init__(f"partition {list(shape)} is not a ({k},{l})-hook partition")
        self.shape = shape
        self.k = k
        self.l = l


class ShapeMismatchError(SuperschurError, ValueError):
    """Tableau rows do not match the lengths prescribed by the shape."""


class DimensionError(SuperschurError, ValueError):
    """Operands live in different ambient dimensions."""


class CapExceededError(SuperschurError):
    """An exhaustive computation would exceed its configured size cap."""


class ContractError(SuperschurError, ValueError):
    """A checked precondition of an operation does not hold."""


class NoWitnessError(SuperschurError):
    """No tableau of the requested shape and content exists."""
