"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of a formula."""


class RangeError(OverflowError):
    """A length is too large to evaluate in double precision."""


class ValidationError(ValueError):
    """A rotation system or cycle is malformed."""


class UnsupportedGraphError(ValueError):
    """The operation is only defined for a narrower class of graphs."""


class EmbeddingNotFoundError(RuntimeError):
    """Randomized search exhausted its budget without reaching the target genus."""


class EqualizationError(RuntimeError):
    """Grafting cannot equalize lengths because the crossing graph is disconnected."""
