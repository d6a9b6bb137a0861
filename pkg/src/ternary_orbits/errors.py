class HypothesisError(ValueError):
    """A form violates a standing hypothesis (odd determinant, special, isotropic, ...)."""


class NotAZeroError(ValueError):
    """The supplied vector is not a primitive zero of the form."""


class SearchError(RuntimeError):
    """A bounded search (witnesses, height vector, enumeration box) came up empty."""
