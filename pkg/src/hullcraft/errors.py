"""Exception types raised across hullcraft."""


class HullcraftError(Exception):
    """Base class for all library errors."""


class PreconditionError(HullcraftError, ValueError):
    """An operation was called outside its stated domain."""


class NotPrime(PreconditionError):
    pass


class SizeExceeded(PreconditionError):
    pass


class DivisionByZero(HullcraftError, ZeroDivisionError):
    pass


class NotADivisor(PreconditionError):
    pass


class DimensionMismatch(PreconditionError):
    pass


class ZeroScalar(PreconditionError):
    pass


class BudgetExceeded(HullcraftError):
    """Exhaustive enumeration would need more work than allowed.

    ``required`` holds the enumeration count that would have been needed.
    """

    def __init__(self, required, budget):
        super().__init__(f"enumeration needs {required} evaluations, budget is {budget}")
        self.required = required
        self.budget = budget


class DuplicatePoint(PreconditionError):
    pass


class BadDimension(PreconditionError):
    pass


class CosetCollision(PreconditionError):
    pass


class BadSpec(PreconditionError):
    pass


class NonOrthonormalizable(HullcraftError):
    """The hull cannot be brought into the block standard form."""


class TargetTooLarge(PreconditionError):
    pass


class UnsupportedField(PreconditionError):
    pass


class ReductionFailed(HullcraftError):
    """Hull reduction did not reach the requested dimension."""


class BadLevel(PreconditionError):
    pass


class BadRange(PreconditionError):
    pass


class ParseError(HullcraftError, ValueError):
    pass
