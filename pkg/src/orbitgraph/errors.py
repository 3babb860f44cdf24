"""Exception types raised across the package."""


class OrbitGraphError(Exception):
    """Base class for package errors."""


class InputError(OrbitGraphError):
    """Malformed user input (files, names, parameters)."""


class OutOfRange(InputError):
    pass


class NotNormal(OrbitGraphError):
    pass


class BadAction(OrbitGraphError):
    pass


class BadIdentification(OrbitGraphError):
    pass


class ClosureTooLarge(OrbitGraphError):
    pass


class CoprimalityViolated(InputError):
    pass


class NotAPGroup(OrbitGraphError):
    pass


class BadKernel(OrbitGraphError):
    pass


class HypothesisViolated(OrbitGraphError):
    pass


class InvalidAutomorphism(BadAction):
    pass


class BudgetExceeded(OrbitGraphError):
    """Automorphism search ran out of its node budget; no partial answer."""


AutBudgetExceeded = BudgetExceeded


class NotFGraph(OrbitGraphError):
    pass


class AbelianGroup(OrbitGraphError):
    pass
