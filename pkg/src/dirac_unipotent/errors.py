"""Exception types."""


class ParameterError(ValueError):
    """Invalid parameters for a family, model or candidate."""


class InsufficientBoundError(ParameterError):
    """The K-type box is too small to capture every contributing K-type."""
