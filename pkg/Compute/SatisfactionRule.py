import math
from enum import Enum

from Analytic.Parameters import ManagementPolicy


class Outcome(Enum):
    Satisfied = "Satisfied"
    Unsatisfied = "Unsatisfied"
    Dropped = "Dropped"


class SatisfactionRule:
    """
    Classifies a finished job against its latency budget.

    Joint: satisfied iff t_air + t_wireline + t_comp <= b_total.
    Disjoint: additionally t_air + t_wireline <= b_comm and t_comp <= b_comp.
    The comparisons are non-strict up to TOLERANCE seconds of floating point noise.
    """
    TOLERANCE = 1e-12

    def __init__(self, policy, budget):
        self.policy = ManagementPolicy.parse(policy)
        self.budget = budget
        if self.policy is ManagementPolicy.Disjoint and not budget.isSplit:
            raise ValueError("Disjoint management needs both the comm and the comp budgets")

    def classify(self, job, tCommAir=None, tWireline=None, tComp=None):
        if job.dropped:
            return Outcome.Dropped

        for name, value in (("tCommAir", tCommAir), ("tWireline", tWireline), ("tComp", tComp)):
            if value is None or not math.isfinite(value):
                raise ValueError(f"Job {job.jobId}: latency component {name} is missing ({value!r})")

        if tCommAir + tWireline + tComp > job.bTotal + self.TOLERANCE:
            return Outcome.Unsatisfied

        if self.policy is ManagementPolicy.Disjoint:
            if tCommAir + tWireline > self.budget.comm + self.TOLERANCE:
                return Outcome.Unsatisfied
            if tComp > self.budget.comp + self.TOLERANCE:
                return Outcome.Unsatisfied

        return Outcome.Satisfied

    def classifyCompleted(self, job):
        """Classifies a job from the timestamps recorded along its path."""
        if job.dropped:
            return Outcome.Dropped
        tWireline = None if job.deliveryTime is None or job.airDoneTime is None else job.deliveryTime - job.airDoneTime
        return self.classify(job, job.airLatency, tWireline, job.compLatency)
