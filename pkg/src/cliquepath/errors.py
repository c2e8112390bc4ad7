"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed graph6 or edge-list input.

    ``offset`` is the byte offset (graph6) and ``line`` the 1-based line
    number (edge list); whichever does not apply is ``None``.
    """

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        where = []
        if offset is not None:
            where.append(f"byte {offset}")
        if line is not None:
            where.append(f"line {line}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.offset = offset
        self.line = line


class DomainError(ValueError):
    """Arguments outside an operation's precondition."""


class UnsupportedSizeError(DomainError):
    """Graph order above the 62-vertex cap."""


class BudgetExceeded(RuntimeError):
    """An exact search hit its configured work or size cap."""


class ConvergenceError(RuntimeError):
    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual
