"""Exception hierarchy shared across the package."""


class TopoDeckError(Exception):
    """Base class for every error raised by topodeck."""


class GraphError(TopoDeckError, ValueError):
    """A graph or a reference into a graph is malformed."""


class DomainError(TopoDeckError, ValueError):
    """An operation was called outside its domain (e.g. deck of a non-compact space)."""


class ParseError(TopoDeckError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CacheCorruptError(TopoDeckError):
    """A cache record failed its checksum or the header is unreadable."""
