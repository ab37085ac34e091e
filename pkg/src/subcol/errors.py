"""Exception types shared across the package."""


class SubcolError(Exception):
    """Base class for all package errors."""


class GraphError(SubcolError, ValueError):
    """Malformed graph, vertex, or embedding."""


class NotAPathError(GraphError):
    """A vertex sequence that was expected to be a path is not one."""


class InvalidDecomposition(SubcolError, ValueError):
    """A decomposition failed verification where a valid one is required."""


class InvalidConstruction(SubcolError, ValueError):
    """A k-tree construction sequence is inconsistent."""


class BudgetExceeded(SubcolError, RuntimeError):
    """An exact search would exceed its configured size or work budget."""


class ParseError(SubcolError, ValueError):
    """Malformed input file; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += source
        if line is not None:
            where += f":{line}" if where else f"line {line}"
        super().__init__(f"{where}: {message}" if where else message)
