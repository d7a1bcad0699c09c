"""Exception types shared across the package."""


class VerkitError(Exception):
    """Base class for all errors raised by verkit."""


class OutOfRange(VerkitError):
    """An index or label lies outside its documented range."""


class UnsupportedPrime(VerkitError):
    """The requested operation is not defined at this prime (usually p=2)."""


class NegativeLeadingCoefficient(VerkitError):
    """A character fed to the tilting decomposition was not effective."""


class BoundExceeded(VerkitError):
    """The requested category is larger than the configured build bound."""
