"""Exception types shared across the engine."""


class QG2Error(Exception):
    pass


class DivisionByZero(QG2Error, ZeroDivisionError):
    pass


class ModeMismatch(QG2Error, TypeError):
    """Operands come from different coefficient modes."""


class PoleAtSpecialization(QG2Error, ZeroDivisionError):
    """A denominator vanishes at the chosen root of unity."""


class InvalidArgs(QG2Error, ValueError):
    pass


class DegreeBoundExceeded(QG2Error, ValueError):
    pass


class UnknownSymbol(QG2Error, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class ExprSyntaxError(QG2Error, SyntaxError):
    def __init__(self, msg, line=1, column=1):
        super().__init__(f"{msg} (line {line}, column {column})")
        self.line = line
        self.column = column
