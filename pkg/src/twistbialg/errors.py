"""Exception types shared by every module."""


class DomainError(ValueError):
    """An operation was called outside its domain (overlapping grounds, bad split, ...)."""


class CapacityError(RuntimeError):
    """The instance is larger than a brute-force routine is willing to handle."""


class NotInvertibleError(ArithmeticError):
    """A character has no inverse for the requested convolution."""
