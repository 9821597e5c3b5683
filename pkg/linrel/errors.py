class LinrelError(Exception):
    """Base class of every error raised by the library."""


class DimensionMismatchError(LinrelError, ValueError):
    """Ambient or space dimensions of the operands do not fit together."""


class PreconditionError(LinrelError, ValueError):
    """An operation was called outside the situation it is defined for."""


class ConsistencyError(LinrelError, RuntimeError):
    """Two computations that must agree disagreed beyond tolerance."""


class DocumentError(LinrelError, ValueError):
    """A relation or parameter document could not be read or validated."""
