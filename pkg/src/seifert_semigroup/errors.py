"""Domain-specific error types shared across modules."""


class TrivialSemigroupError(ValueError):
    """The semigroup is all of the nonnegative integers (b0 >= d)."""


class RationalLinkError(ValueError):
    """The link is rational: the module contains every nonnegative integer,
    so it has no positive Frobenius number."""
