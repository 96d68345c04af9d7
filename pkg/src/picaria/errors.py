"""Exception hierarchy for the picaria package."""


class PicariaError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(PicariaError):
    """Board parameters (k, s) describe an unsupported game."""


class NotationError(PicariaError):
    """A position string is malformed or violates position invariants."""


class InvalidPositionError(PicariaError):
    """A board that cannot occur in play (e.g. both players hold a line)."""


class IllegalMoveError(PicariaError):
    """A move that is not legal in the given position."""


class TerminalPositionError(PicariaError):
    """An operation that requires a live position was given a finished one."""


class UnknownPositionError(PicariaError):
    """A position that is not reachable from the initial position."""


class FixtureError(PicariaError):
    """A proof fixture is malformed (bad syntax or an illegal move line)."""


class TableFormatError(PicariaError):
    """A solve-table file is malformed or has the wrong format version."""


class TableChecksumError(TableFormatError):
    """A solve-table file failed its payload checksum."""


class TableSpecMismatchError(TableFormatError):
    """A solve-table file was written for different board parameters."""
