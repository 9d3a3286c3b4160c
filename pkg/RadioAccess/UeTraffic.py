import math
import itertools
from dataclasses import dataclass

from Engine.Event import EventKind
from RadioAccess.Packet import Packet, PriorityClass
from Tools.DataRecord import DataRecord
from Workload.Job import Job


@dataclass
class UeConfig(DataRecord):
    """
    Attributes:
        ueCount (int): UEs in the cell.
        perUeJobRate (float): Poisson job rate of one UE (jobs/second).
        backgroundRate (float): average background load of one UE (bits/second).
        backgroundPacketBits (float): size of one background packet (bits).
    """
    ueCount: int = 60
    perUeJobRate: float = 1.0
    backgroundRate: float = 5e5
    backgroundPacketBits: float = 24000

    def __post_init__(self):
        if int(self.ueCount) != self.ueCount or self.ueCount < 0:
            raise ValueError(f"ueCount must be an integer >= 0, got {self.ueCount}")
        if self.perUeJobRate < 0 or self.backgroundRate < 0:
            raise ValueError("UE job and background rates must be >= 0")
        if self.backgroundPacketBits <= 0:
            raise ValueError(f"backgroundPacketBits must be > 0, got {self.backgroundPacketBits}")

    @property
    def aggregateJobRate(self):
        return self.ueCount * self.perUeJobRate

    @property
    def backgroundPacketRate(self):
        """Aggregate background packets per second."""
        return self.ueCount * self.backgroundRate / self.backgroundPacketBits


class UeTraffic:
    """
    Superposition of the UE Poisson sources: jobs (stream "arrivals", UE picked on stream "placement") and, when the
    uplink carries it, background packets (stream "background"). Nothing is generated after `horizon`.
    """

    def __init__(self, context, ueConfig, uplink, nInput, nOutput, bTotal, horizon=math.inf, background=True):
        self.context = context
        self.ueConfig = ueConfig
        self.uplink = uplink
        self.nInput = nInput
        self.nOutput = nOutput
        self.bTotal = bTotal
        self.horizon = horizon
        self.background = background and ueConfig.backgroundRate > 0 and ueConfig.ueCount > 0
        self.jobIds = itertools.count()
        self.onJobGenerated = None

    def start(self):
        now = self.context.clock
        if self.ueConfig.aggregateJobRate > 0:
            self._scheduleNext(now, self.ueConfig.aggregateJobRate, "arrivals", EventKind.JobArrival)
        if self.background:
            self._scheduleNext(now, self.ueConfig.backgroundPacketRate, "background", EventKind.BackgroundPacket)
        return self

    def onJobArrival(self, event):
        now = self.context.clock
        job = Job(
            jobId=next(self.jobIds),
            genTime=now,
            nInput=self.nInput,
            nOutput=self.nOutput,
            bTotal=self.bTotal,
            ueId=self.context.rng.integer("placement", self.ueConfig.ueCount),
        )
        if self.onJobGenerated is not None:
            self.onJobGenerated(job)
        self.uplink.submitJob(job)
        self._scheduleNext(now, self.ueConfig.aggregateJobRate, "arrivals", EventKind.JobArrival)
        return job

    def onBackgroundPacket(self, event):
        now = self.context.clock
        self.uplink.submitBackground(
            Packet(size=self.ueConfig.backgroundPacketBits, priorityClass=PriorityClass.Background, enqueueTime=now)
        )
        self._scheduleNext(now, self.ueConfig.backgroundPacketRate, "background", EventKind.BackgroundPacket)

    def _scheduleNext(self, now, rate, stream, kind):
        nextTime = now + self.context.rng.poissonInterarrival(stream, rate)
        if nextTime <= self.horizon:
            self.context.schedule(nextTime, kind)
