"""Exception types shared across the package."""


class WildtreeError(Exception):
    """Base class for all package errors."""


class GraphError(WildtreeError, ValueError):
    """Invalid graph or graph argument."""


class DisconnectedGraphError(GraphError):
    """A pipeline that needs a connected graph received a disconnected one."""


class GraphFormatError(GraphError):
    """Malformed graph file; carries the offending line number."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class LimitExceeded(WildtreeError, RuntimeError):
    """A configured safety limit (cycles, stack rows, enumeration cap) was hit."""


class LibraryError(WildtreeError, ValueError):
    """Malformed, corrupted or incompatible library file."""
