"""
Scenario runners. The module level functions take only plain, picklable arguments so they can be shipped to a
ProcessPoolExecutor; every replication builds its own Simulator and shares nothing with the others.

    runScenario(config)              theory, simulation or validate, depending on config.mode
    runReplication(config, index)    one seeded simulation run
    runValidation(config)            exponential tandem run checked against the analytic model
"""
import math
import warnings
from concurrent.futures import ProcessPoolExecutor

import numpy as np
from scipy import stats

import Architecture
from Analytic.Capacity import serviceCapacity, satisfactionFor
from Analytic.Parameters import SystemRates
from Analytic.Satisfaction import jointSatisfaction, disjointSatisfaction
from Engine.Simulator import Simulator
from Harness.RunMetrics import RunMetrics
from Harness.ScenarioConfig import ScenarioMode
from Initialization.SetupBaseStructure import SetupBaseStructure
from Tools.Exceptions import UnstableSystemError, UnstableGridPointWarning
from Tools.Logger import Logger
from Tools.Timer import Timer


def runReplication(config, replication=0):
    """
    Returns:
        tuple: (RunMetrics, Simulator) of the finished run.
    """
    simulator = Simulator(seed=config.seed, replication=replication, logLevel=config.logLevel)
    simulator.executionTimer.start("runReplication")
    SetupBaseStructure(simulator).Setup(config)
    simulator.traffic.start()
    simulator.runUntil(math.inf if config.drain else config.horizon)
    simulator.executionTimer.stop("runReplication")
    summary = simulator.performance.summary()
    simulator.logger.debug(
        f"replication {replication}: {simulator.processedEvents} events, {summary['jobsTotal']} measured jobs"
    )
    return RunMetrics(mode=config.mode.value, architecture=config.architecture, **summary), simulator


def runScenario(config, context=None, executor=None, allowUnstable=False):
    """
    Runs the scenario described by the config.

    Args:
        config (ScenarioConfig): scenario parameters.
        context: object with `logger` and `executionTimer` (the CLI experiment). Optional.
        executor (concurrent.futures.Executor): used for the replications when given.
        allowUnstable (bool): theory mode reports an unstable arrival rate as an absent satisfaction instead of
            raising UnstableSystemError.

    Returns:
        RunMetrics: the aggregate over the replications (simulation), the analytic values (theory) or the validation
        report (validate).
    """
    logger, timer = _tools(context, config)
    timer.start("runScenario")
    try:
        if config.mode is ScenarioMode.Theory:
            return runTheory(config, allowUnstable=allowUnstable, logger=logger)
        if config.mode is ScenarioMode.Validate:
            return runValidation(config, logger=logger, timer=timer)
        return runSimulation(config, executor=executor, logger=logger, timer=timer)
    finally:
        timer.stop("runScenario")


def runTheory(config, allowUnstable=False, logger=None):
    logger = logger or Logger(None, className="Scenario", logLevel=config.logLevel)
    architecture = Architecture.resolve(config.architecture, config.architectureOverrides)
    budget = architecture.budgetSplit(config.get("budget.total"))
    mu1 = config.get("rates.mu1")
    mu2 = config.get("rates.mu2")

    capacity = serviceCapacity(architecture.policy, mu1, mu2, budget, alpha=config.alpha)
    lam = config.arrivalRate
    rates = SystemRates(0.0, mu1, mu2).withLambda(lam)
    satisfaction = None
    if rates.isStable:
        satisfaction = satisfactionFor(architecture.policy)(rates, budget)
    elif allowUnstable:
        warnings.warn(f"{architecture.name}: lam={lam} is outside the stable region", UnstableGridPointWarning, stacklevel=2)
    else:
        raise UnstableSystemError(f"{architecture.name}: arrival rate {lam} reaches the slowest service rate {rates.minRate}")

    logger.info(f"{architecture.name}: capacity {capacity:.4f} jobs/s, satisfaction at lam={lam}: {satisfaction}")
    return RunMetrics(
        mode=ScenarioMode.Theory.value,
        architecture=architecture.name,
        replications=0,
        satisfactionRate=satisfaction,
        capacity=capacity,
    )


def runSimulation(config, executor=None, logger=None, timer=None):
    """
    Runs the replications, serially or on the executor, and folds the execution stats of every replication into
    `timer` when given.
    """
    logger = logger or Logger(None, className="Scenario", logLevel=config.logLevel)
    replications = range(config.replications)
    ownExecutor = None
    if executor is None and config.workers > 1 and config.replications > 1:
        executor = ownExecutor = ProcessPoolExecutor(max_workers=min(config.workers, config.replications))
    try:
        if executor is None:
            runs = [_replicate(config, index) for index in replications]
        else:
            runs = list(executor.map(_replicate, [config] * config.replications, replications))
    finally:
        if ownExecutor is not None:
            ownExecutor.shutdown()

    if timer is not None:
        for _, performance in runs:
            timer.merge(performance)
    metrics = RunMetrics.aggregate([run for run, _ in runs], mode=ScenarioMode.Simulation.value, architecture=config.architecture)
    logger.info(
        f"{config.architecture}: {metrics.jobsTotal} jobs over {metrics.replications} replications, "
        f"satisfaction {metrics.satisfactionRate}"
    )
    return metrics


def _replicate(config, replication):
    metrics, simulator = runReplication(config, replication)
    return metrics, simulator.executionTimer.performance


def validationConfig(config):
    """
    The config of a validation run: both stages exponential, no background traffic, FCFS without drops, and a
    horizon long enough for validation.targetJobs measured jobs at the configured arrival rate.
    """
    lam = config.arrivalRate
    if lam <= 0:
        raise UnstableSystemError("Validation needs a positive arrival rate")
    horizon = 1.05 * config.get("validation.targetJobs") / (0.9 * lam)
    overrides = dict(config.architectureOverrides)
    overrides.update({"queueDiscipline": "Fcfs", "dropJobs": False, "packetPriority": False, "reevaluateDrops": False})
    return config.withOverrides({
        "mode": ScenarioMode.Simulation.value,
        "architectureOverrides": overrides,
        "ue.count": 1,
        "ue.jobRate": lam,
        "ue.backgroundRate": 0.0,
        "uplink.mode": "ExponentialJob",
        "compute.service": "ExponentialJob",
        "simulation.horizon": horizon,
        "simulation.warmup": 0.1 * horizon,
        "simulation.drain": True,
        "simulation.replications": 1,
    })


def runValidation(config, logger=None, timer=None):
    """
    Simulates the tandem of the two exponential stages and compares the empirical satisfaction with the analytic
    joint and disjoint values. The sojourns of a tagged job in the two stages are independent in steady state, which
    the report checks with their sample correlation and a KS test of the air sojourn against Exp(mu1 - lam).
    """
    logger = logger or Logger(None, className="Scenario", logLevel=config.logLevel)
    lam = config.arrivalRate
    mu1 = config.get("rates.mu1")
    mu2 = config.get("rates.mu2")
    rates = SystemRates(0.0, mu1, mu2).withLambda(lam)
    if not rates.isStable:
        raise UnstableSystemError(f"Validation at lam={lam} is unstable (min service rate {rates.minRate})")

    runConfig = validationConfig(config)
    metrics, simulator = runReplication(runConfig, 0)
    if timer is not None:
        timer.merge(simulator.executionTimer.performance)
    budget = simulator.architecture.budgetSplit(config.get("budget.total"))
    samples = simulator.performance.latencySamples()
    air, wireline, comp = samples["air"], samples["wireline"], samples["comp"]
    jobs = len(air)

    tolerance = simulator.rule.TOLERANCE
    jointHits = air + wireline + comp <= budget.total + tolerance
    disjointHits = jointHits & (air + wireline <= budget.comm + tolerance) & (comp <= budget.comp + tolerance)
    analyticJoint = jointSatisfaction(rates, budget)
    analyticDisjoint = disjointSatisfaction(rates, budget)
    batches = config.get("validation.batches")

    report = {
        "lam": lam,
        "jobs": jobs,
        "analyticJoint": analyticJoint,
        "empiricalJoint": _rate(jointHits),
        "analyticDisjoint": analyticDisjoint,
        "empiricalDisjoint": _rate(disjointHits),
        "binomialSigmaJoint": binomialSigma(analyticJoint, jobs),
        "batchSigmaJoint": batchMeansSigma(jointHits, batches),
        "binomialSigmaDisjoint": binomialSigma(analyticDisjoint, jobs),
        "batchSigmaDisjoint": batchMeansSigma(disjointHits, batches),
        "pearsonAirComp": None,
        "ksStatistic": None,
        "ksPValue": None,
    }
    if jobs >= 2:
        report["pearsonAirComp"] = float(stats.pearsonr(air, comp)[0])
        ks = stats.kstest(air, "expon", args=(0.0, 1.0 / (mu1 - lam)))
        report["ksStatistic"] = float(ks.statistic)
        report["ksPValue"] = float(ks.pvalue)

    logger.info(
        f"lam={lam}: joint {report['empiricalJoint']} vs {analyticJoint:.6f}, "
        f"disjoint {report['empiricalDisjoint']} vs {analyticDisjoint:.6f}, rho={report['pearsonAirComp']}"
    )
    metrics.mode = ScenarioMode.Validate.value
    metrics.architecture = config.architecture
    metrics.validation = report
    return metrics


def binomialSigma(probability, count):
    if count <= 0:
        return None
    return math.sqrt(probability * (1.0 - probability) / count)


def batchMeansSigma(indicators, batches):
    """
    Standard error of the mean of a serially correlated 0/1 sequence, from the means of `batches` consecutive
    batches. None when there are fewer observations than batches.
    """
    indicators = np.asarray(indicators, dtype=float)
    if batches < 2 or len(indicators) < batches:
        return None
    size = len(indicators) // batches
    means = indicators[: size * batches].reshape(batches, size).mean(axis=1)
    return float(np.std(means, ddof=1) / math.sqrt(batches))


def _rate(hits):
    return float(np.mean(hits)) if len(hits) else None


def _tools(context, config):
    if context is not None:
        return context.logger, context.executionTimer
    return Logger(None, className="Scenario", logLevel=config.logLevel), Timer(None)
