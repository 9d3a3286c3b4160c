class ConfigurationError(ValueError):
    """Raised for malformed scenario files, unknown keys and invalid presets."""


class SimulationError(RuntimeError):
    """Raised when the simulated world reaches a state that can only be a bug."""


class SchedulingError(SimulationError):
    """An event was scheduled before the current simulated clock."""


class UnstableSystemError(ValueError):
    """The arrival rate reaches or exceeds the slowest stage service rate."""


class DegenerateBudgetWarning(UserWarning):
    """The budget leaves no room for the job; the satisfaction probability is 0."""


class UnstableGridPointWarning(UserWarning):
    """A curve grid point lies outside the stable region and was skipped."""
