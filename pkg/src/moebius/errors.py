"""Exception hierarchy shared by every module."""


class MoebiusError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(MoebiusError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PreconditionError(DomainError):
    """An argument is well-formed but violates an operation's precondition."""


class CoprimalityError(DomainError):
    pass


class ModulusMismatchError(DomainError):
    pass


class BudgetError(MoebiusError):
    """An exhaustive enumeration would exceed its size guard."""


class ConsistencyError(MoebiusError, ArithmeticError):
    """An exact identity failed internally; always indicates a bug."""


class MissingDivisorError(MoebiusError, LookupError):
    def __init__(self, n, divisor):
        super().__init__(f"no value supplied for divisor {divisor} of {n}")
        self.n = n
        self.divisor = divisor


class ParseError(MoebiusError, ValueError):
    def __init__(self, text, position, char):
        super().__init__(f"invalid character {char!r} at position {position} in {text!r}")
        self.text = text
        self.position = position
        self.char = char
