import math
from dataclasses import dataclass, field, fields

import numpy as np
from scipy import stats

from Tools.DataRecord import DataRecord

# Two-sided 95% normal quantile of the confidence half-widths
CONFIDENCE_Z = float(stats.norm.ppf(0.975))

COUNT_FIELDS = (
    "jobsGenerated",
    "jobsTotal",
    "jobsSatisfied",
    "jobsUnsatisfied",
    "jobsDropped",
    "jobsInFlight",
    "jobsCompleted",
)

# Means weighted by the completed jobs of each replication when pooled
LATENCY_FIELDS = (
    "meanAirLatency",
    "meanCommLatency",
    "meanCompLatency",
    "meanE2e",
    "meanTokensPerSecond",
)

# Metric -> column of its confidence half-width
HALF_WIDTH_FIELDS = {
    "satisfactionRate": "satisfactionRateHalfWidth",
    "meanCommLatency": "meanCommLatencyHalfWidth",
    "meanCompLatency": "meanCompLatencyHalfWidth",
    "meanE2e": "meanE2eHalfWidth",
    "meanTokensPerSecond": "meanTokensPerSecondHalfWidth",
}

VALIDATION_FIELDS = (
    "lam",
    "jobs",
    "analyticJoint",
    "empiricalJoint",
    "analyticDisjoint",
    "empiricalDisjoint",
    "binomialSigmaJoint",
    "batchSigmaJoint",
    "binomialSigmaDisjoint",
    "batchSigmaDisjoint",
    "pearsonAirComp",
    "ksStatistic",
    "ksPValue",
)
VALIDATION_PREFIX = "validation_"


@dataclass(repr=False)
class RunMetrics(DataRecord):
    """
    Metrics of one scenario run or of the aggregate of several replications.

    satisfactionRate = jobsSatisfied / jobsTotal where jobsTotal counts the measured jobs with a final outcome
    (satisfied, unsatisfied or dropped). None when no job was measured.
    """
    mode: str = "simulation"
    architecture: str = None
    axis: str = None
    axisValue: float = None
    replications: int = 1
    jobsGenerated: int = 0
    jobsTotal: int = 0
    jobsSatisfied: int = 0
    jobsUnsatisfied: int = 0
    jobsDropped: int = 0
    jobsInFlight: int = 0
    jobsCompleted: int = 0
    satisfactionRate: float = None
    satisfactionRateServed: float = None
    meanAirLatency: float = None
    meanCommLatency: float = None
    meanCompLatency: float = None
    meanE2e: float = None
    meanTokensPerSecond: float = None
    capacity: float = None
    satisfactionRateHalfWidth: float = None
    meanCommLatencyHalfWidth: float = None
    meanCompLatencyHalfWidth: float = None
    meanE2eHalfWidth: float = None
    meanTokensPerSecondHalfWidth: float = None
    replicationMetrics: list = field(default_factory=list)
    validation: dict = field(default_factory=dict)

    @classmethod
    def aggregate(cls, runs, **labels):
        """
        Pools the replications of one scenario: counts are summed, the satisfaction rates are recomputed from the
        pooled counts, latency means are weighted by the completed jobs and every metric in HALF_WIDTH_FIELDS gets
        the normal-approximation half-width of its per-replication values (None with fewer than two values).
        """
        if not runs:
            raise ValueError("Cannot aggregate an empty list of runs")
        if len(runs) == 1:
            single = runs[0]
            values = {f.name: getattr(single, f.name) for f in fields(single)}
            values.update(labels)
            values["replicationMetrics"] = [single]
            return cls(**values)

        metrics = cls(replications=len(runs), replicationMetrics=list(runs), **labels)
        for name in COUNT_FIELDS:
            metrics[name] = sum(run[name] for run in runs)

        served = metrics.jobsSatisfied + metrics.jobsUnsatisfied
        metrics.satisfactionRate = metrics.jobsSatisfied / metrics.jobsTotal if metrics.jobsTotal > 0 else None
        metrics.satisfactionRateServed = metrics.jobsSatisfied / served if served > 0 else None

        for name in LATENCY_FIELDS:
            weighted = [(run[name], run.jobsCompleted) for run in runs if run[name] is not None and run.jobsCompleted > 0]
            weight = sum(count for _, count in weighted)
            metrics[name] = sum(value * count for value, count in weighted) / weight if weight > 0 else None

        for name, halfWidthName in HALF_WIDTH_FIELDS.items():
            metrics[halfWidthName] = halfWidth([run[name] for run in runs])
        return metrics

    def asRow(self):
        """Flat CSV row: CSV_COLUMNS, then the validation report with prefixed keys."""
        row = {name: self[name] for name in CSV_COLUMNS}
        for name in VALIDATION_FIELDS:
            if name in self.validation:
                row[VALIDATION_PREFIX + name] = self.validation[name]
        return row

    @classmethod
    def fromRow(cls, row):
        values = {name: row.get(name) for name in CSV_COLUMNS}
        validation = {
            key[len(VALIDATION_PREFIX):]: value
            for key, value in row.items()
            if key.startswith(VALIDATION_PREFIX) and value is not None
        }
        return cls(validation=validation, **values)


CSV_COLUMNS = tuple(f.name for f in fields(RunMetrics) if f.name not in ("replicationMetrics", "validation"))
INTEGER_COLUMNS = ("replications",) + COUNT_FIELDS


def halfWidth(values):
    values = [value for value in values if value is not None and math.isfinite(value)]
    if len(values) < 2:
        return None
    return CONFIDENCE_Z * float(np.std(values, ddof=1)) / math.sqrt(len(values))
