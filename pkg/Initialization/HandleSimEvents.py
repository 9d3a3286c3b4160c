from Compute.SatisfactionRule import Outcome
from Engine.Event import EventKind
from Tools.Exceptions import SimulationError

"""
Event kinds and the component that consumes them:

    JobArrival        -> traffic.onJobArrival        a UE generates a job, its prompt enters the uplink
    BackgroundPacket  -> traffic.onBackgroundPacket  a UE sends a background packet
    PacketUplinkDone  -> uplink.onPacketDone         a packet (or a whole job) leaves the air interface
    WirelineDelivery  -> computeNode.enqueue         the job reaches the computing queue
    ComputeStart      -> computeNode.startService    the idle server picks the next job
    ComputeDone       -> computeNode.finishService   the job leaves the computing node
"""


class HandleSimEvents:
    def __init__(self, context):
        self.context = context
        self.logger = self.context.logger
        self.routes = {
            EventKind.JobArrival: lambda event: self.context.traffic.onJobArrival(event),
            EventKind.BackgroundPacket: lambda event: self.context.traffic.onBackgroundPacket(event),
            EventKind.PacketUplinkDone: lambda event: self.context.uplink.onPacketDone(event),
            EventKind.WirelineDelivery: lambda event: self.context.computeNode.enqueue(event.payload, event.time),
            EventKind.ComputeStart: lambda event: self.context.computeNode.startService(event.time),
            EventKind.ComputeDone: lambda event: self.context.computeNode.finishService(event.payload, event.time),
        }

    def Register(self):
        for kind in self.routes:
            self.context.on(kind, self.Call)
        return self

    def Call(self, event):
        route = self.routes.get(event.kind)
        if route is None:
            raise SimulationError(f"Unhandled event kind {event.kind} at t={event.time}")
        return route(event)

    def jobCompleted(self, job):
        outcome = self.context.rule.classifyCompleted(job)
        self.context.performance.onFinished(job, outcome)

    def jobDropped(self, job):
        self.context.performance.onFinished(job, Outcome.Dropped)
