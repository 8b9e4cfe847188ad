"""Exception types raised across the package."""


class QwolError(Exception):
    """Base class for package errors."""


class InvalidArgument(QwolError, ValueError):
    pass


class DivisionByZeroPolynomial(QwolError, ZeroDivisionError):
    pass


class BothZero(QwolError, ValueError):
    pass


class NotInvertible(QwolError, ArithmeticError):
    """The element shares a nonconstant factor with the modulus."""


class InternalError(QwolError, RuntimeError):
    """An exactness check failed; indicates a bug, not bad input."""


class ParseError(QwolError, ValueError):
    pass


class EmptyRange(ParseError):
    pass
