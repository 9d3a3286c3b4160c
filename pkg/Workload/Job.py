import math
from dataclasses import dataclass, field
from typing import Optional, Any

from Tools.DataRecord import DataRecord
from Tools.Exceptions import SimulationError

# Fields that can be assigned once and never changed afterwards
WRITE_ONCE = ("jobId", "genTime", "commLatencyObserved")


@dataclass(repr=False)
class Job(DataRecord):
    """
    One inference request, from its generation at the UE to its completion at the computing node.

    Attributes:
        jobId (int): unique identifier.
        genTime (float): generation time at the UE (seconds). Immutable.
        nInput (int): prompt tokens.
        nOutput (int): generated tokens.
        bTotal (float): end-to-end latency budget (seconds).
        ueId (int): UE that generated the job.
        commLatencyObserved (float): generation to arrival at the computing queue, wireline included. Set once.
    """
    jobId: int
    genTime: float
    nInput: int
    nOutput: int
    bTotal: float
    ueId: Optional[int] = None
    commLatencyObserved: Optional[float] = None
    # Uplink progress
    packetCount: Optional[int] = None
    packetsServed: int = 0
    airDoneTime: Optional[float] = None
    # Wireline and computing node timestamps
    deliveryTime: Optional[float] = None
    queueArrivalTime: Optional[float] = None
    predictedCompletion: Optional[float] = None
    serviceStart: Optional[float] = None
    serviceTime: Optional[float] = None
    completionTime: Optional[float] = None
    dropped: bool = False
    outcome: Optional[Any] = field(default=None, compare=False)

    def __post_init__(self):
        if self.genTime is None or not math.isfinite(self.genTime) or self.genTime < 0:
            raise ValueError(f"genTime must be finite and >= 0, got {self.genTime}")
        if self.nInput < 1:
            raise ValueError(f"nInput must be >= 1, got {self.nInput}")
        if self.nOutput < 0:
            raise ValueError(f"nOutput must be >= 0, got {self.nOutput}")
        if self.bTotal is None or not math.isfinite(self.bTotal) or self.bTotal <= 0:
            raise ValueError(f"bTotal must be finite and > 0, got {self.bTotal}")

    def __setattr__(self, name, value):
        if name in WRITE_ONCE and getattr(self, name, None) is not None:
            raise SimulationError(f"Job {getattr(self, 'jobId', None)}: {name} is already set")
        super().__setattr__(name, value)

    def __hash__(self):
        return hash(self.jobId)

    def observeCommLatency(self, latency):
        self.commLatencyObserved = latency

    @property
    def deadline(self):
        return self.genTime + self.bTotal

    @property
    def airLatency(self):
        """Generation to the end of the last uplink packet."""
        return None if self.airDoneTime is None else self.airDoneTime - self.genTime

    @property
    def compLatency(self):
        """Sojourn at the computing node: queueing plus service."""
        if self.completionTime is None or self.queueArrivalTime is None:
            return None
        return self.completionTime - self.queueArrivalTime

    @property
    def e2eLatency(self):
        return None if self.completionTime is None else self.completionTime - self.genTime

    @property
    def tokensPerSecond(self):
        e2e = self.e2eLatency
        if e2e is None or e2e <= 0:
            return None
        return (self.nInput + self.nOutput) / e2e
