class IsochainError(ValueError):
    pass


class OutOfRange(IsochainError):
    pass


class NotFunctional(IsochainError):
    pass


class NotInjective(IsochainError):
    pass


class ChainMismatch(IsochainError):
    pass


class CeilingExceeded(IsochainError):
    pass


class UnsupportedFamily(IsochainError):
    pass


class IndexOutOfRange(IsochainError):
    pass


class ClosureViolation(IsochainError):
    pass


class ParseError(IsochainError):
    pass
