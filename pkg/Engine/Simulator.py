import sys
import math

from Engine.EventQueue import EventQueue
from Engine.RngStreams import RngStreams
from Tools.Exceptions import SchedulingError, SimulationError
from Tools.Logger import Logger
from Tools.Timer import Timer


class Simulator:
    """
    Single-threaded discrete-event kernel and the context of one simulation run. Components get the logger, the timer,
    the random streams and the scheduling calls from here, and register one handler per event kind.

    Example:

        simulator = Simulator(seed=2024)
        simulator.on(EventKind.JobArrival, handleArrival)
        simulator.schedule(0.0, EventKind.JobArrival)
        simulator.runUntil(10.0)
    """

    def __init__(self, seed=2024, replication=0, logLevel=1, startTime=0.0):
        self.logLevel = logLevel
        self.events = EventQueue(startTime)
        self.handlers = {}
        self.processedEvents = 0
        self.rng = RngStreams(seed, replication)
        self.logger = Logger(self, className=type(self).__name__, logLevel=logLevel)
        self.executionTimer = Timer(self)
        self.structure = None

    @property
    def clock(self):
        return self.events.now

    def Log(self, message):
        print(f"[t={self.clock:.6f}]{message}", file=sys.stderr)

    def on(self, kind, handler):
        self.handlers[kind] = handler

    def schedule(self, time, kind, payload=None):
        return self.events.schedule(time, kind, payload)

    def runUntil(self, tEnd=math.inf):
        """
        Processes events in (time, seq) order until the queue is empty or the next event lies after tEnd.
        """
        self.executionTimer.start("Simulator.runUntil")
        tracing = self.logger.isEnabled(4)
        while self.events and self.events.peekTime() <= tEnd:
            event = self.events.pop()
            handler = self.handlers.get(event.kind)
            if handler is None:
                raise SimulationError(f"No handler registered for {event.kind.name} at t={event.time}")
            if tracing:
                self.logger.trace(f"{event.kind.name} #{event.seq} {event.payload!r}")
            try:
                handler(event)
            except SchedulingError as e:
                raise SchedulingError(f"{e} (while handling {event.kind.name} #{event.seq} at t={event.time})") from e
            self.processedEvents += 1
        self.executionTimer.stop("Simulator.runUntil")
        return self
