"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument violates an operation's documented precondition."""


class FormatError(ValueError):
    """Malformed graph6 text or representation JSON."""


class CapacityError(ValueError):
    """Input exceeds a configured size cap."""


class PreconditionError(ValueError):
    """A graph does not meet the requirements of the delta-graph definition."""
