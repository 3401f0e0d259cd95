"""Exception hierarchy shared by all modules.

The CLI maps these onto its documented exit codes, so new error kinds
should subclass one of the existing classes rather than ValueError.
"""


class FuzzidealError(Exception):
    """Base class for all library errors."""


class RingConstructionError(FuzzidealError):
    """A ring spec violates its invariants or a table fails the axioms."""


class ResourceLimitError(FuzzidealError):
    """A configured size/cap was exceeded."""


class BackendError(FuzzidealError):
    """Operation not supported on this backend (e.g. compose over Z)."""


class NotProperIdealError(FuzzidealError):
    """Primeness/semiprimeness asked of the whole ring."""


class InvalidFuzzyIdealError(FuzzidealError):
    """A map or chain fails the fuzzy-ideal axioms.

    ``witness`` carries the offending pair/level so reports can show it.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ConstantIdealError(FuzzidealError):
    """Predicate applied to a constant fuzzy ideal."""


class TheoremViolationError(FuzzidealError):
    """An equivalence or implication the theory guarantees failed.

    This always indicates a bug (here or in the source material) and is
    reported with the divergent data attached.
    """

    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = details
