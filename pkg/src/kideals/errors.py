"""Exception hierarchy shared by every module of the package."""


class KIdealError(Exception):
    """Base class for all errors raised by kideals."""


class MalformedInputError(KIdealError, ValueError):
    """Ragged tables, out-of-range indices, unparsable specs."""


class SemiringAxiomError(KIdealError, ValueError):
    """Tables are well formed but violate a semiring axiom."""

    def __init__(self, report):
        self.report = report
        first = report.violations[0] if report.violations else ("?", ())
        super().__init__(f"semiring axiom violated: {first[0]} at {first[1]}")


class NotApplicableError(KIdealError):
    """The operation is only defined for a narrower class of semirings."""


class ContractViolation(KIdealError, ValueError):
    """A precondition of an operation does not hold for the given arguments."""


class BudgetExceededError(KIdealError):
    """An exhaustive search ran past its configured operation budget."""

    def __init__(self, limit, what=""):
        self.limit = limit
        self.what = what
        msg = f"search budget of {limit} operations exceeded"
        if what:
            msg += f" ({what})"
        super().__init__(msg)
