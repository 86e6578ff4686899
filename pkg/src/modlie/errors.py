"""Exception types shared across the package."""


class ModlieError(Exception):
    """Base class for all library errors."""


class SizeMismatchError(ModlieError):
    """Matrix or vector dimensions are inconsistent for the requested operation."""


class NonCommutingError(ModlieError):
    """A pair of operators fails the commutation requirement.

    Carries the exact commutator PQ - QP so callers can report it.
    """

    def __init__(self, commutator):
        self.commutator = commutator
        super().__init__("operators do not commute")


class DegenerateTwistError(ModlieError):
    """A twist matrix is singular and therefore not an automorphism."""


class PreconditionViolatedError(ModlieError):
    """An operation's stated precondition does not hold for the given inputs."""


class BudgetExceededError(ModlieError):
    """A deterministic evaluation budget was exhausted before a verdict."""

    def __init__(self, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(f"evaluation budget exceeded: need {required}, have {budget}")


class UnknownFixtureError(ModlieError):
    """A fixture name does not match any known construction."""


class PairFormatError(ModlieError):
    """A module-pair document is malformed or violates the schema."""
