import math
import heapq
import itertools

from Engine.Event import Event
from Tools.Exceptions import SchedulingError


class EventQueue:
    """
    Future event list on a binary heap. `now` is the time of the last popped event and never decreases.
    """

    def __init__(self, startTime=0.0):
        self.now = startTime
        self._heap = []
        self._seq = itertools.count()

    def schedule(self, time, kind, payload=None):
        if time is None or not math.isfinite(time):
            raise SchedulingError(f"Cannot schedule {kind} at non-finite time {time}")
        if time < self.now:
            raise SchedulingError(f"Cannot schedule {kind} at t={time!r}: the clock is already at t={self.now!r}")
        event = Event(time, next(self._seq), kind, payload)
        heapq.heappush(self._heap, event)
        return event

    def pop(self):
        event = heapq.heappop(self._heap)
        self.now = event.time
        return event

    def peekTime(self):
        return self._heap[0].time if self._heap else None

    def __len__(self):
        return len(self._heap)

    def __bool__(self):
        return bool(self._heap)
