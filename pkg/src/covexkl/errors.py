"""Exception types shared across the package."""


class CovexError(Exception):
    """Base class for all covexkl errors."""


class InvalidTripleError(CovexError):
    """A triple failed validation; .problems lists the violations."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class NotInVarietyError(CovexError):
    """The fixed-point window is not Bruhat-above the vexillary element."""


class BudgetExceededError(CovexError):
    """The Weyl group is larger than the configured oracle budget."""
