"""Domain errors.

Every error carries a stable machine-readable ``code`` which the CLI prints
and maps to exit status 1.
"""


class AlgSeriesError(ValueError):
    code = "domain-error"

    def __init__(self, message=""):
        super().__init__(message or self.code)


class IFTViolation(AlgSeriesError):
    code = "ift-violation"


class InsufficientPrecision(AlgSeriesError):
    code = "insufficient-precision"


class InseparableOrNotMinimal(AlgSeriesError):
    code = "inseparable-or-not-minimal"


class NotABranch(AlgSeriesError):
    code = "not-a-branch"


class FieldNotFinite(AlgSeriesError):
    code = "field-not-finite"


class BudgetExceeded(AlgSeriesError):
    code = "budget-exceeded"

    def __init__(self, needed, budget):
        self.needed = needed
        self.budget = budget
        super().__init__(f"{needed} candidates exceed the enumeration budget {budget}")


class InsufficientData(AlgSeriesError):
    code = "insufficient-data"


class ParseError(AlgSeriesError):
    code = "parse-error"
