"""Package-wide exception types."""


class InvalidSpecError(ValueError):
    """A semigroup description or an argument violates a structural constraint."""


class ResourceLimitError(RuntimeError):
    """An exact computation hit its configured resource cap.

    Raised instead of degrading to an approximate or truncated answer, so
    oracle results are never silently incomplete.
    """
