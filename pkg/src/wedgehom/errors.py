"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """A constructor or operation received an argument outside its domain."""


class SizeLimitError(ValueError):
    """An input exceeds a configured brute-force size cap."""
