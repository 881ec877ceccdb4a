"""Exception hierarchy shared by all syzlab modules."""


class SyzlabError(Exception):
    """Base class for every error raised by syzlab."""


class RingMismatchError(SyzlabError, ValueError):
    """Operands live in different polynomial rings."""


class ArityError(SyzlabError, ValueError):
    """A point or substitution does not match the number of ring variables."""


class BudgetExceeded(SyzlabError, RuntimeError):
    """A computation hit its configured step, size or enumeration cap.

    This is a resource failure, never a mathematical one: rerunning with a
    larger budget (``SYZLAB_BUDGET_SCALE``) is expected to succeed.
    """

    def __init__(self, what, limit):
        super().__init__(f"{what} budget exceeded (limit {limit})")
        self.what = what
        self.limit = limit


class UnknownVarietyError(SyzlabError, KeyError):
    def __str__(self):
        return f"unknown variety: {self.args[0]!r}"
