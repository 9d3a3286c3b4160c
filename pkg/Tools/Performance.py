import numpy as np

# Outcome names, see Compute.SatisfactionRule.Outcome
OUTCOMES = ("Satisfied", "Unsatisfied", "Dropped")


class Performance:
    """
    Job bookkeeping of one simulation run. Only jobs generated at or after `warmup` are measured.

    Conservation: measured generated = satisfied + unsatisfied + dropped + in flight.
    Jobs still in flight whose age already exceeds their budget cannot be satisfied any more and are reported as
    unsatisfied.
    """

    def __init__(self, context, warmup=0.0):
        self.context = context
        self.logger = self.context.logger
        self.warmup = warmup
        self.generated = 0
        self.inFlight = {}
        self.finished = []
        self.tracking = {name: 0 for name in OUTCOMES}

    def isMeasured(self, job):
        return job.genTime >= self.warmup

    def onGenerated(self, job):
        if not self.isMeasured(job):
            return
        self.generated += 1
        self.inFlight[job.jobId] = job

    def onFinished(self, job, outcome):
        job.outcome = outcome
        if not self.isMeasured(job):
            return
        self.inFlight.pop(job.jobId, None)
        self.finished.append(job)
        self.tracking[outcome.name] += 1
        if self.logger.isEnabled(4):
            self.logger.trace(f"job {job.jobId} -> {outcome.name}")

    def summary(self, now=None):
        now = self.context.clock if now is None else now
        expired = sum(1 for job in self.inFlight.values() if now - job.genTime > job.bTotal)
        satisfied = self.tracking["Satisfied"]
        unsatisfied = self.tracking["Unsatisfied"] + expired
        dropped = self.tracking["Dropped"]
        total = satisfied + unsatisfied + dropped
        served = satisfied + unsatisfied

        completed = [job for job in self.finished if job.completionTime is not None]
        summary = {
            "jobsGenerated": self.generated,
            "jobsTotal": total,
            "jobsSatisfied": satisfied,
            "jobsUnsatisfied": unsatisfied,
            "jobsDropped": dropped,
            "jobsInFlight": len(self.inFlight) - expired,
            "jobsCompleted": len(completed),
            "satisfactionRate": satisfied / total if total > 0 else None,
            "satisfactionRateServed": satisfied / served if served > 0 else None,
            "meanAirLatency": _mean([job.airLatency for job in completed]),
            "meanCommLatency": _mean([job.commLatencyObserved for job in completed]),
            "meanCompLatency": _mean([job.compLatency for job in completed]),
            "meanE2e": _mean([job.e2eLatency for job in completed]),
            "meanTokensPerSecond": _mean([job.tokensPerSecond for job in completed]),
        }
        return summary

    def latencySamples(self):
        """
        Per-stage sojourns of the completed measured jobs, in generation order.

        Returns:
            dict: numpy arrays keyed by "genTime", "air", "wireline" and "comp".
        """
        completed = sorted((job for job in self.finished if job.completionTime is not None), key=lambda job: job.genTime)
        return {
            "genTime": np.array([job.genTime for job in completed], dtype=float),
            "air": np.array([job.airLatency for job in completed], dtype=float),
            "wireline": np.array([job.deliveryTime - job.airDoneTime for job in completed], dtype=float),
            "comp": np.array([job.compLatency for job in completed], dtype=float),
        }


def _mean(values):
    values = [value for value in values if value is not None]
    if not values:
        return None
    return float(np.mean(values))
