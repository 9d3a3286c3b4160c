import warnings
from dataclasses import dataclass, field
from concurrent.futures import ProcessPoolExecutor

from Harness.Scenario import runScenario
from Harness.ScenarioConfig import ScenarioMode, SweepAxis
from Tools.DataRecord import DataRecord
from Tools.Exceptions import ConfigurationError, UnstableGridPointWarning
from Tools.Logger import Logger
from Tools.Timer import Timer

# Config key driven by each sweep axis and the type of its values
AXIS_KEYS = {
    SweepAxis.UeCount: ("ue.count", int),
    SweepAxis.JobRate: ("ue.jobRate", float),
    SweepAxis.GpuCount: ("compute.gpuCount", int),
}


@dataclass(repr=False)
class SweepSpec(DataRecord):
    """
    Attributes:
        axis (SweepAxis): the swept parameter.
        grid (list): strictly increasing axis values.
        alpha (float): satisfaction target of the capacity extraction.
        interpolate (bool): interpolate linearly between the last point meeting alpha and the next one.
    """
    axis: SweepAxis = SweepAxis.UeCount
    grid: list = field(default_factory=list)
    alpha: float = 0.95
    interpolate: bool = False

    def __post_init__(self):
        self.axis = SweepAxis(self.axis)
        if not self.grid:
            raise ValueError("The sweep grid is empty")
        _, cast = AXIS_KEYS[self.axis]
        self.grid = [cast(value) for value in self.grid]
        if any(later <= earlier for earlier, later in zip(self.grid, self.grid[1:])):
            raise ValueError(f"The sweep grid must be strictly increasing, got {self.grid}")
        if not 0 < self.alpha < 1:
            raise ValueError(f"alpha must be in (0, 1), got {self.alpha}")

    @classmethod
    def fromConfig(cls, config):
        return cls(
            axis=config.get("sweep.axis"),
            grid=list(config.get("sweep.grid")),
            alpha=config.alpha,
            interpolate=config.get("sweep.interpolate"),
        )

    @property
    def configKey(self):
        return AXIS_KEYS[self.axis][0]


@dataclass(repr=False)
class SweepResult(DataRecord):
    architecture: str = None
    rows: list = field(default_factory=list)
    capacity: float = None


def extractCapacity(points, alpha, interpolate=False):
    """
    Largest axis value whose satisfaction rate is at least alpha.

    Args:
        points (list): (axis value, satisfaction rate) pairs in increasing axis order. A rate of None is treated as
            missing alpha.
        interpolate (bool): move the answer towards the next grid point by linear interpolation of the rate.

    Returns:
        float: the capacity, None when no point meets alpha.
    """
    capacity = None
    index = None
    for position, (value, rate) in enumerate(points):
        if rate is not None and rate >= alpha:
            capacity, index = value, position
    if capacity is None or not interpolate or index + 1 >= len(points):
        return capacity

    value, rate = points[index]
    nextValue, nextRate = points[index + 1]
    if nextRate is None or nextRate >= rate:
        return capacity
    return value + (nextValue - value) * (rate - alpha) / (rate - nextRate)


def pointConfig(config, sweep, architecture, value):
    return config.withOverrides({"architecture": architecture, sweep.configKey: value})


@dataclass
class PointContext:
    """Logger and execution timer of one sweep point, built inside the worker that runs it."""
    logger: Logger
    executionTimer: Timer


def runPoint(config):
    """
    Worker entry point of one sweep point.

    Returns:
        tuple: (RunMetrics, performance dict of the point's Timer) so the caller can fold the timing of the point
        and of its replications into its own timer.
    """
    context = PointContext(Logger(None, className="Sweep", logLevel=config.logLevel), Timer(None))
    context.executionTimer.start("runPoint")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UnstableGridPointWarning)
        metrics = runScenario(config, context=context, allowUnstable=True)
    context.executionTimer.stop("runPoint")
    return metrics, context.executionTimer.performance


def runSweep(config, sweep=None, architectures=None, workers=None, context=None):
    """
    Runs one scenario per (architecture, grid point) and extracts the empirical capacity of every architecture.

    Every point uses the master seed of the config, so consecutive points differ only by the swept value. The points
    are independent and run in a process pool when workers > 1; results keep the grid order either way.

    Returns:
        list: one SweepResult per architecture, in the order given.
    """
    sweep = sweep or SweepSpec.fromConfig(config)
    architectures = list(architectures or [config.architecture])
    workers = config.workers if workers is None else workers
    logger = context.logger if context is not None else Logger(None, className="Sweep", logLevel=config.logLevel)
    timer = context.executionTimer if context is not None else Timer(None)

    if config.mode is ScenarioMode.Theory and sweep.axis is SweepAxis.GpuCount:
        raise ConfigurationError("The analytic model has no GPU count, sweep ueCount or jobRate in theory mode")

    tasks = [pointConfig(config, sweep, architecture, value) for architecture in architectures for value in sweep.grid]
    logger.info(f"{len(tasks)} points: {architectures} x {sweep.axis.value} {sweep.grid}")

    timer.start("runSweep")
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as executor:
            outcomes = list(executor.map(runPoint, tasks))
    else:
        outcomes = [runPoint(task) for task in tasks]
    elapsed = timer.stop("runSweep")
    for _, performance in outcomes:
        timer.merge(performance)
    metrics = [row for row, _ in outcomes]
    logger.info(f"{len(tasks)} points in {elapsed:.2f}s, {timer.elapsedTotal('runPoint'):.2f}s of point time so far")

    results = []
    for position, architecture in enumerate(architectures):
        rows = metrics[position * len(sweep.grid): (position + 1) * len(sweep.grid)]
        for value, row in zip(sweep.grid, rows):
            row.axis = sweep.axis.value
            row.axisValue = value
        if sweep.axis is SweepAxis.GpuCount:
            capacity = extractGpuCapacity(sweep, rows)
        else:
            capacity = extractCapacity([(row.axisValue, row.satisfactionRate) for row in rows], sweep.alpha, sweep.interpolate)
        for row in rows:
            if config.mode is not ScenarioMode.Theory:
                row.capacity = capacity
        results.append(SweepResult(architecture=architecture, rows=rows, capacity=capacity))
        logger.info(f"{architecture}: capacity {capacity}")
    return results


def extractGpuCapacity(sweep, rows):
    """
    Smallest GPU count whose satisfaction rate reaches alpha, None when none does.

    Satisfaction grows with the GPU count, so this axis reports the fewest GPUs meeting alpha instead of the largest
    axis value that `extractCapacity` returns for the ueCount and jobRate axes.
    """
    for value, row in zip(sweep.grid, rows):
        if row.satisfactionRate is not None and row.satisfactionRate >= sweep.alpha:
            return value
    return None


def sweepRows(results):
    """Flattens the sweep results into the rows of one CSV, architecture by architecture."""
    return [row for result in results for row in result.rows]
