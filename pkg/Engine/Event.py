from enum import Enum
from dataclasses import dataclass, field
from typing import Any

from Tools.DataRecord import DataRecord


class EventKind(Enum):
    JobArrival = "JobArrival"
    PacketUplinkDone = "PacketUplinkDone"
    WirelineDelivery = "WirelineDelivery"
    ComputeStart = "ComputeStart"
    ComputeDone = "ComputeDone"
    BackgroundPacket = "BackgroundPacket"


@dataclass(order=True)
class Event(DataRecord):
    """
    Timeline entry. Events are totally ordered by (time, seq); seq is assigned by the queue at insertion.
    """
    time: float
    seq: int
    kind: EventKind = field(compare=False)
    payload: Any = field(default=None, compare=False, repr=False)
