class QRecError(Exception):
    """Base class for library errors."""


class InvalidQError(QRecError, ValueError):
    """q is zero or a root of unity (q in {0, 1, -1} over the rationals)."""


class NotRegularError(QRecError):
    """The operator matrix does not have full row rank over K(t)[sigma]."""


class SingularSystemError(QRecError):
    """lambda (or rho) vanishes identically; regularize first."""


class IterationLimitError(QRecError):
    """A regularization loop exceeded its step cap."""


class DocumentError(QRecError, ValueError):
    """Malformed or inconsistent system document."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None, path: str | None = None):
        self.line, self.column, self.path = line, column, path
        where = []
        if path:
            where.append(path)
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.message = message
