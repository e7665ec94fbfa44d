"""Exception hierarchy.

Every error raised by the library derives from :class:`ScapropError`.  The
three intermediate classes map onto the CLI exit codes: typing problems (2),
syntax problems (3) and semantic/backend problems (4).
"""
from __future__ import annotations


class ScapropError(Exception):
    exit_code = 1


class TypingError(ScapropError):
    """A term is ill-typed with respect to a signature or a constructor."""

    exit_code = 2


class BadObject(TypingError):
    pass


class UndeclaredGenerator(TypingError):
    def __init__(self, name: str):
        super().__init__(f"undeclared generator {name!r}")
        self.name = name


class BoundaryMismatch(TypingError):
    def __init__(self, position, expected, found):
        where = f" at {position}" if position is not None else ""
        super().__init__(
            f"boundary mismatch{where}: expected {expected}, found {found}")
        self.position = position
        self.expected = expected
        self.found = found


class BadParameterArity(TypingError):
    pass


class ParameterArityMismatch(TypingError):
    pass


class DisciplineMismatch(TypingError):
    pass


class NotAWireTerm(TypingError):
    pass


class ParseError(ScapropError):
    exit_code = 3

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class BackendError(ScapropError):
    exit_code = 4


class MissingAssignment(BackendError):
    pass


class BackendMismatch(BackendError):
    pass


class BadArity(BackendError):
    pass


class NegativeEntry(BackendError):
    pass


class DimensionMismatch(BackendError):
    pass
