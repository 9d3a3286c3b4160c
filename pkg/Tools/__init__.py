from .Exceptions import (
    ConfigurationError, SimulationError, SchedulingError, UnstableSystemError, DegenerateBudgetWarning,
    UnstableGridPointWarning,
)
from .DataRecord import DataRecord
from .Timer import Timer
from .Logger import Logger
from .Performance import Performance
