"""Exception types shared across the library."""


class PathCensusError(Exception):
    """Base class for all library-specific errors."""


class UndefinedType(PathCensusError):
    """A type tuple reduced to nothing; the path-function is undefined there."""


class ParseError(PathCensusError):
    """Malformed textual input (type tuples, tournament files)."""


class InvalidOrder(PathCensusError):
    """Tournament order outside a constructor's legal range."""


class OrderTooLarge(PathCensusError):
    """Brute-force census requested beyond the permutation limit."""


class TypeOrderMismatch(PathCensusError):
    """Total block length of a type does not fit the tournament order."""


class ScanTooLarge(PathCensusError):
    """Scan requested beyond the configured composition-total limit."""


class TheoremViolation(PathCensusError):
    """An internal consistency guarantee broke (e.g. a symmetric type with an
    odd path-function value, or an odd raw tally before halving).  Signals an
    implementation bug, never bad user input."""


class CacheIoError(PathCensusError):
    """Cache file could not be read or written."""


class CacheFormatError(PathCensusError):
    """A cache file line failed to parse.  ``line_number`` is 1-based."""

    def __init__(self, message: str, line_number: int | None = None):
        super().__init__(message)
        self.line_number = line_number
