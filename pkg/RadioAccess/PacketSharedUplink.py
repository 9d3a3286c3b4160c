from enum import Enum
from collections import deque

from Engine.Event import EventKind
from RadioAccess.Base import Base
from RadioAccess.Packet import PriorityClass
from RadioAccess.Packetizer import packetize
from Tools.Exceptions import SimulationError


class UplinkDiscipline(Enum):
    Fifo = "Fifo"
    JobPriority = "JobPriority"

    @classmethod
    def parse(cls, value):
        return value if isinstance(value, cls) else cls(str(value))


class PacketSharedUplink(Base):
    """
    Single-server packet uplink of fixed capacity shared by the job prompts and the background traffic.

    A packet of `size` bits holds the channel for size / capacity seconds. Service is non-preemptive. Under JobPriority
    the head job packet is always chosen over background packets (FIFO within each class); under Fifo all packets
    share one queue.
    """
    PARAMETERS = {
        # Aggregate uplink capacity (bits/second)
        "capacity": 3.2e7,
        # Fifo or JobPriority
        "discipline": UplinkDiscipline.JobPriority,
    }

    def __init__(self, context, onJobServed, **overrides):
        super().__init__(context, onJobServed, **overrides)
        self.discipline = UplinkDiscipline.parse(self.discipline)
        if self.capacity <= 0:
            raise ValueError(f"Uplink capacity must be > 0, got {self.capacity}")
        self.fifoQueue = deque()
        self.jobQueue = deque()
        self.backgroundQueue = deque()
        self.jobPacketsWaiting = 0
        self.inService = None

    def submitJob(self, job):
        packets = packetize(job, self.bytesPerToken, self.maxPacketBits, now=self.context.clock)
        job.packetCount = len(packets)
        job.packetsServed = 0
        for packet in packets:
            self._enqueue(packet)
        self.serve()

    def submitBackground(self, packet):
        self._enqueue(packet)
        self.serve()

    def serve(self):
        if self.busy:
            return None
        packet = self._nextPacket()
        if packet is None:
            return None

        self.busy = True
        self.inService = packet
        if self.traceServiceStarts:
            self.serviceLog.append((self.context.clock, packet.priorityClass, self.jobPacketsWaiting))
        if self.logger.isEnabled(4):
            self.logger.trace(
                f"{packet.priorityClass.name} packet waited {self.context.clock - packet.enqueueTime:.6f}s, "
                f"{self.queuedPackets} packets queued"
            )
        return self.context.schedule(
            self.context.clock + packet.size / self.capacity, EventKind.PacketUplinkDone, packet
        )

    def onPacketDone(self, event):
        packet = event.payload
        self.busy = False
        self.inService = None
        if packet.priorityClass is PriorityClass.JobHigh:
            job = packet.job
            job.packetsServed += 1
            if job.packetsServed > job.packetCount:
                raise SimulationError(f"Job {job.jobId}: {job.packetsServed} packets served out of {job.packetCount}")
            if job.packetsServed == job.packetCount:
                self.jobServed(job)
        self.serve()

    @property
    def queuedPackets(self):
        return len(self.fifoQueue) + len(self.jobQueue) + len(self.backgroundQueue)

    def _enqueue(self, packet):
        if packet.priorityClass is PriorityClass.JobHigh:
            self.jobPacketsWaiting += 1
        if self.discipline is UplinkDiscipline.Fifo:
            self.fifoQueue.append(packet)
        elif packet.priorityClass is PriorityClass.JobHigh:
            self.jobQueue.append(packet)
        else:
            self.backgroundQueue.append(packet)

    def _nextPacket(self):
        if self.fifoQueue:
            packet = self.fifoQueue.popleft()
        elif self.jobQueue:
            packet = self.jobQueue.popleft()
        elif self.backgroundQueue:
            packet = self.backgroundQueue.popleft()
        else:
            return None
        if packet.priorityClass is PriorityClass.JobHigh:
            self.jobPacketsWaiting -= 1
        return packet
