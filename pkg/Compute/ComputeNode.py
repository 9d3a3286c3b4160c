from Compute.ComputeQueue import ComputeQueue, QueueDiscipline
from Engine.Event import EventKind
from Tools.Exceptions import ConfigurationError, SimulationError


class ComputeNode:
    """
    Single-server computing node with a priority queue and an optional drop rule.

    Jobs arrive through `enqueue`. Whenever the server is idle and jobs are waiting, a ComputeStart event is scheduled at
    the current instant so that every arrival sharing that instant is queued before the next job is chosen. Service is
    non-preemptive. Completed jobs are handed to `onCompleted(job)` and dropped jobs to `onDropped(job)`.

    Drop rule (dropJobs): on arrival the completion of the job is predicted as
        now + residual of the job in service + expected service of every job ahead + own expected service
    and the job is dropped if the prediction is later than genTime + bTotal. With reevaluateDrops the check is repeated
    when the job is taken out of the queue.

    Attributes:
        DEFAULT_PARAMETERS (dict): queue discipline and drop policy.
    """
    DEFAULT_PARAMETERS = {
        # Fcfs or SlackPriority
        "queueDiscipline": QueueDiscipline.Fcfs,
        # Drop jobs whose predicted completion misses their deadline
        "dropJobs": False,
        # Repeat the drop check when a job leaves the queue
        "reevaluateDrops": False,
        # Record (time, jobId, key, smallest waiting key) at every dispatch
        "traceDispatch": False,
    }

    def __init__(self, context, serviceModel, onCompleted=None, onDropped=None, **overrides):
        self.context = context
        unknown = set(overrides) - set(self.DEFAULT_PARAMETERS)
        if unknown:
            raise ConfigurationError(f"Unknown {self.__class__.__name__} parameters: {sorted(unknown)}")
        self.context.structure.AddConfiguration(parent=self, **{**self.DEFAULT_PARAMETERS, **overrides})
        self.queueDiscipline = QueueDiscipline.parse(self.queueDiscipline)
        self.logger = self.context.logger
        self.serviceModel = serviceModel
        self.onCompleted = onCompleted
        self.onDropped = onDropped
        self.queue = ComputeQueue(self.queueDiscipline)
        self.inService = None
        self.startPending = False
        self.dispatchLog = []

    @property
    def busy(self):
        return self.inService is not None

    def enqueue(self, job, now):
        """
        Returns:
            bool: False when the job was dropped on arrival.
        """
        if job.commLatencyObserved is None:
            raise SimulationError(f"Job {job.jobId} reached the computing node without an observed communication latency")
        if job.queueArrivalTime is not None:
            raise SimulationError(f"Job {job.jobId} enqueued twice")

        job.queueArrivalTime = now
        self.queue.push(job, now)

        if self.dropJobs:
            job.predictedCompletion = self.predictCompletion(job, now)
            if job.predictedCompletion > job.deadline:
                self.queue.remove(job)
                self._drop(job, f"predicted completion {job.predictedCompletion:.6f} > deadline {job.deadline:.6f}")
                return False

        self.requestStart(now)
        return True

    def predictCompletion(self, job, now):
        predicted = now
        if self.inService is not None:
            predicted += self.serviceModel.residualTime(self.inService, now - self.inService.serviceStart)
        for ahead in self.queue.jobsAhead(job):
            predicted += self.serviceModel.expectedServiceTime(ahead)
        predicted += self.serviceModel.expectedServiceTime(job)
        return predicted

    def requestStart(self, now):
        if self.inService is not None or self.startPending or not self.queue:
            return None
        self.startPending = True
        return self.context.schedule(now, EventKind.ComputeStart)

    def startService(self, now):
        """
        Takes the head job and schedules its ComputeDone. Returns the event, or None when there is nothing to serve.
        """
        self.startPending = False
        if self.inService is not None:
            return None

        job = self._nextJob(now)
        if job is None:
            return None

        job.serviceStart = now
        job.serviceTime = self.serviceModel.serviceTime(job)
        self.inService = job
        if self.logger.isEnabled(4):
            self.logger.trace(f"job {job.jobId} starts service for {job.serviceTime:.6f}s")
        return self.context.schedule(now + job.serviceTime, EventKind.ComputeDone, job)

    def finishService(self, job, now):
        if job is not self.inService:
            raise SimulationError(f"Job {job.jobId} completed but job {getattr(self.inService, 'jobId', None)} is in service")
        job.completionTime = now
        self.inService = None
        if self.onCompleted is not None:
            self.onCompleted(job)
        self.requestStart(now)

    def _nextJob(self, now):
        while self.queue:
            key = self.queue.keyOf(self.queue.peek())
            job = self.queue.pop()
            if self.dropJobs and self.reevaluateDrops:
                job.predictedCompletion = now + self.serviceModel.expectedServiceTime(job)
                if job.predictedCompletion > job.deadline:
                    self._drop(job, f"re-evaluated completion {job.predictedCompletion:.6f} > deadline {job.deadline:.6f}")
                    continue
            if self.traceDispatch:
                nextWaiting = self.queue.peek()
                self.dispatchLog.append((now, job.jobId, key, None if nextWaiting is None else self.queue.keyOf(nextWaiting)))
            return job
        return None

    def _drop(self, job, reason):
        job.dropped = True
        if self.logger.isEnabled(3):
            self.logger.debug(f"dropping job {job.jobId}: {reason}")
        if self.onDropped is not None:
            self.onDropped(job)
