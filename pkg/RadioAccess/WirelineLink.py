from Engine.Event import EventKind
from Tools.Exceptions import SimulationError


class WirelineLink:
    """
    Constant-delay wired hop from the RAN to the computing node.
    """

    def __init__(self, context, delay):
        if delay is None or delay < 0:
            raise ValueError(f"Wireline delay must be >= 0, got {delay}")
        self.context = context
        self.delay = delay

    def deliverToCompute(self, job, lastPacketDone):
        """
        Schedules the arrival of `job` at the computing queue `delay` seconds after its last packet left the air
        interface, and records the observed communication latency (wireline included).
        """
        if job.deliveryTime is not None:
            raise SimulationError(f"Job {job.jobId} delivered twice (first at t={job.deliveryTime})")
        if job.packetCount is not None and job.packetsServed != job.packetCount:
            raise SimulationError(
                f"Job {job.jobId} delivered with {job.packetsServed} of {job.packetCount} packets served"
            )
        job.airDoneTime = lastPacketDone
        job.deliveryTime = lastPacketDone + self.delay
        job.observeCommLatency(job.deliveryTime - job.genTime)
        return self.context.schedule(job.deliveryTime, EventKind.WirelineDelivery, job)
