import bisect
import itertools
from enum import Enum

from Tools.Exceptions import SimulationError


class QueueDiscipline(Enum):
    Fcfs = "Fcfs"
    SlackPriority = "SlackPriority"

    @classmethod
    def parse(cls, value):
        return value if isinstance(value, cls) else cls(str(value))


class ComputeQueue:
    """
    Waiting jobs of the computing node kept sorted by their priority key.

    Fcfs: key = (arrival time at the queue, insertion order).
    SlackPriority: key = (genTime + bTotal - commLatencyObserved, genTime, jobId), smallest first.
    """

    def __init__(self, discipline=QueueDiscipline.Fcfs):
        self.discipline = QueueDiscipline.parse(discipline)
        self._entries = []
        self._keys = {}
        self._seq = itertools.count()

    def priorityKey(self, job, now):
        if self.discipline is QueueDiscipline.Fcfs:
            return (now, next(self._seq))
        if job.commLatencyObserved is None:
            raise SimulationError(f"Job {job.jobId} queued without an observed communication latency")
        return (job.genTime + job.bTotal - job.commLatencyObserved, job.genTime, job.jobId)

    def push(self, job, now):
        if job.jobId in self._keys:
            raise SimulationError(f"Job {job.jobId} is already queued")
        key = self.priorityKey(job, now)
        entry = (key, job.jobId, job)
        index = bisect.bisect_right(self._entries, (key, job.jobId), key=lambda e: e[:2])
        self._entries.insert(index, entry)
        self._keys[job.jobId] = key
        return index

    def pop(self):
        if not self._entries:
            return None
        _, jobId, job = self._entries.pop(0)
        del self._keys[jobId]
        return job

    def remove(self, job):
        key = self._keys.pop(job.jobId)
        index = bisect.bisect_left(self._entries, (key, job.jobId), key=lambda e: e[:2])
        del self._entries[index]

    def peek(self):
        return self._entries[0][2] if self._entries else None

    def keyOf(self, job):
        return self._keys.get(job.jobId)

    def jobsAhead(self, job):
        key = self._keys[job.jobId]
        index = bisect.bisect_left(self._entries, (key, job.jobId), key=lambda e: e[:2])
        return [entry[2] for entry in self._entries[:index]]

    def __contains__(self, job):
        return job.jobId in self._keys

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return (entry[2] for entry in self._entries)
