from enum import Enum
from dataclasses import dataclass, field
from typing import Optional, Any

from Tools.DataRecord import DataRecord


class PriorityClass(Enum):
    JobHigh = 0
    Background = 1


@dataclass(repr=False)
class Packet(DataRecord):
    """
    One RLC packet on the uplink. Job packets carry their owner job, background packets never do.
    """
    size: float
    priorityClass: PriorityClass
    enqueueTime: float
    ownerJob: Optional[int] = None
    job: Optional[Any] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.size <= 0:
            raise ValueError(f"Packet size must be > 0 bits, got {self.size}")
        isJobPacket = self.priorityClass is PriorityClass.JobHigh
        if isJobPacket != (self.ownerJob is not None):
            raise ValueError(f"{self.priorityClass.name} packet with ownerJob={self.ownerJob}")
