"""Exception types shared across the package."""


class RatgkError(Exception):
    """Base class for all errors raised by this package."""


class CapExceeded(RatgkError):
    """A closure grew past the configured element cap.

    Carries the number of elements found before giving up in ``partial``.
    """

    def __init__(self, cap, partial):
        super().__init__(f"group closure exceeded cap of {cap} elements "
                         f"(found at least {partial})")
        self.cap = cap
        self.partial = partial


class InvalidGenerators(RatgkError):
    """Generators are malformed: inconsistent shapes, singular matrices, ..."""


class NotASubgroup(RatgkError):
    """The given element set is not a subgroup of the stated parent."""


class NotNormal(RatgkError):
    """Quotient requested by a non-normal subgroup."""


class InvalidAction(RatgkError):
    """A representation map failed the homomorphism or invertibility check."""


class GroupSpecError(RatgkError):
    """A group-spec document failed to parse; ``where`` locates the issue."""

    def __init__(self, message, where="$"):
        super().__init__(f"{where}: {message}")
        self.where = where
