from collections import deque

from Engine.Event import EventKind
from RadioAccess.Base import Base
from RadioAccess.Packet import PriorityClass


class ExponentialUplink(Base):
    """
    FCFS M/M/1 air stage: each job is served as a whole for an Exp(rate) time drawn from the "uplink" stream.
    Packetization is bypassed.
    """
    PARAMETERS = {
        # Air-interface service rate (jobs/second)
        "rate": 900.0,
    }

    def __init__(self, context, onJobServed, **overrides):
        super().__init__(context, onJobServed, **overrides)
        if self.rate <= 0:
            raise ValueError(f"Uplink rate must be > 0, got {self.rate}")
        self.queue = deque()
        self.inService = None

    def submitJob(self, job):
        self.queue.append(job)
        if not self.busy:
            self.serve()

    def serve(self):
        if self.busy or not self.queue:
            return None
        job = self.queue.popleft()
        self.busy = True
        self.inService = job
        if self.traceServiceStarts:
            self.serviceLog.append((self.context.clock, PriorityClass.JobHigh, len(self.queue)))
        duration = self.context.rng.exponential("uplink", self.rate)
        return self.context.schedule(self.context.clock + duration, EventKind.PacketUplinkDone, job)

    def onPacketDone(self, event):
        job = event.payload
        self.busy = False
        self.inService = None
        self.jobServed(job)
        self.serve()
