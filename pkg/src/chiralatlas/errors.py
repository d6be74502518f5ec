"""Exception hierarchy shared by every module."""


class AtlasError(Exception):
    """Base class for all errors raised by chiralatlas."""


class InputError(AtlasError, ValueError):
    """Malformed or inconsistent input (degree mismatch, bad index, ...)."""


class ParseError(InputError):
    """Group text that cannot be parsed.

    ``line`` is the 1-based line number in the source, or None.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapacityError(AtlasError):
    """A configured cap (enumeration size, tuple budget) was exceeded.

    ``cap`` names the offending limit; ``stats`` carries partial search
    statistics when the error escapes from a search.
    """

    def __init__(self, message, cap=None, stats=None):
        self.cap = cap
        self.stats = stats
        super().__init__(message)


class InvariantError(AtlasError):
    """An internal consistency check failed. This is always a bug."""
