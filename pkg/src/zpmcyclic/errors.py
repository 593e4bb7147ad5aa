"""Exception hierarchy shared by every module of the package."""


class ZpmError(ValueError):
    """Base class for all invalid-input conditions raised by zpmcyclic."""


class NotPrime(ZpmError):
    pass


class NotAUnit(ZpmError):
    pass


class MixedRings(ZpmError):
    pass


class NonUnitLeadingCoefficient(ZpmError):
    pass


class NonCoprime(ZpmError):
    pass


class EvenLength(ZpmError):
    pass


class WrongModulusKind(ZpmError):
    pass


class NotSelfDual(ZpmError):
    pass


class LengthMismatch(ZpmError):
    pass


class ZeroCode(ZpmError):
    pass


class BudgetExceeded(RuntimeError):
    """A desk-scale enumeration limit was hit. This is not a mathematical failure."""

    def __init__(self, needed: int, budget: int, what: str = "items"):
        super().__init__(f"{what}: {needed} exceeds budget {budget}")
        self.needed = needed
        self.budget = budget
