"""Exception types shared across the package."""


class GuardExceeded(RuntimeError):
    """An exhaustive enumeration would exceed its configured guard."""

    def __init__(self, what, count, guard):
        super().__init__(f"{what}: {count} items exceeds guard {guard}")
        self.what = what
        self.count = count
        self.guard = guard


class VerificationFailed(RuntimeError):
    """A computed object failed the property it is supposed to have."""


class NotApplicable(ValueError):
    """The input does not satisfy the preconditions of an operation."""


class NotNilpotent(ValueError):
    pass


class IndexExceedsCharacteristic(ValueError):
    pass
