"""Exception hierarchy shared by all modules."""


class WprmError(Exception):
    """Base class for library errors."""


class DomainError(WprmError, ValueError):
    """Operand outside the domain of an operation (zero inverse, zero point...)."""


class PreconditionError(WprmError, ValueError):
    """A stated precondition of a construction or check does not hold."""


class StructureError(PreconditionError):
    """A structured representative layout cannot be built for these parameters."""


class BudgetError(WprmError, RuntimeError):
    """An exhaustive search would exceed its configured budget."""


class LambdaFieldError(WprmError, ArithmeticError):
    """A radical scalar outside the base field met a nonzero coordinate."""


class ConsistencyError(WprmError, AssertionError):
    """An internal cross-check between two independent computations failed."""

    def __init__(self, msg, **data):
        super().__init__(msg)
        self.data = data
