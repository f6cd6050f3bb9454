"""Exception types shared across the package."""


class ReachError(Exception):
    """Base class for every error raised by dynreach."""


class InvalidArgument(ReachError, ValueError):
    pass


class CenterViolation(InvalidArgument):
    """An inserted edge does not touch the insertion center."""


class InvariantViolation(ReachError, RuntimeError):
    """Internal bookkeeping went wrong (never a user error)."""


class StreamError(ReachError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class ParseError(StreamError):
    pass


class ValidationError(StreamError):
    pass


class CheckFailure(ReachError):
    """Checked mode found the oracle disagreeing with a brute-force reference."""

    def __init__(self, message: str, command_index: int, pair: tuple[int, int] | None = None):
        self.command_index = command_index
        self.pair = pair
        super().__init__(f"command #{command_index}: {message}")
