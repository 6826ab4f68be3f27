"""Exception hierarchy shared by every module of the package."""


class SingresError(Exception):
    """Base class for all errors raised by singres."""


class GraphSyntaxError(SingresError, ValueError):
    """The graph document could not be parsed."""


class ValidationError(SingresError, ValueError):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class NotNegativeDefinite(SingresError):
    """The intersection form is not negative definite."""


class DimensionMismatch(SingresError, ValueError):
    pass


class ZeroCycle(SingresError, ValueError):
    pass


class EnumerationTooLarge(SingresError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"subcycle enumeration needs {size} cycles, cap is {cap}")
        self.size = size
        self.cap = cap


class PgUnderdetermined(SingresError):
    """Geometric genus was not supplied and cannot be derived from the graph."""


class InvalidWeight(SingresError, ValueError):
    pass


class InvalidRuledSurface(SingresError, ValueError):
    pass


class NotVeryAmple(SingresError, ValueError):
    pass


class NoPlan(SingresError):
    pass
