import os
import math
import warnings
from unittest.mock import MagicMock

from mamba import description, context, it
from expects import (
    expect, equal, be_none, be_within, be_above, be_above_or_equal, be_below, be_below_or_equal, be_true,
    raise_error, have_length,
)

from Harness.Scenario import runScenario, runReplication, validationConfig, binomialSigma, batchMeansSigma
from Harness.ScenarioConfig import ScenarioConfig, ScenarioMode, PROJECT_ROOT
from Harness.Sweep import SweepSpec, runSweep
from Tools.Exceptions import UnstableSystemError, UnstableGridPointWarning
from Tools.Logger import Logger
from Tools.Timer import Timer
from Tests.factories import Factory

SCENARIOS = os.path.join(PROJECT_ROOT, "Data", "scenarios")
ARCHITECTURES = ["IccRan", "DisjointRan", "DisjointMec"]

# Sweeps shared by several examples, computed on first use
_SWEEPS = {}


def sharedSweep(name, build):
    if name not in _SWEEPS:
        _SWEEPS[name] = {result.architecture: result for result in build()}
    return _SWEEPS[name]


def arrivalSweep():
    config = ScenarioConfig().withOverrides({
        "logLevel": 0,
        "simulation.horizon": 30.0,
        "simulation.replications": 1,
        "simulation.workers": 4,
    })
    sweep = SweepSpec(axis="ueCount", grid=list(range(40, 85, 5)), alpha=0.95)
    return runSweep(config, sweep, architectures=ARCHITECTURES)


def gpuSweep():
    config = ScenarioConfig.load(os.path.join(SCENARIOS, "gpu_sweep.yaml")).withOverrides({
        "logLevel": 0,
        "simulation.horizon": 30.0,
        "simulation.replications": 1,
        "simulation.workers": 4,
    })
    return runSweep(config, architectures=ARCHITECTURES)


def validationSweep():
    config = ScenarioConfig.load(os.path.join(SCENARIOS, "validate.yaml")).withOverrides({
        "logLevel": 0,
        "simulation.workers": 3,
    })
    return runSweep(config, architectures=["DisjointRan"])


with description('Scenario') as self:
    with context('theory'):
        with it('reaches twice the MEC capacity with joint management in the RAN'):
            config = Factory.create_config({"mode": "theory", "logLevel": 0})
            icc = runScenario(config)
            mec = runScenario(config.withOverrides({"architecture": "DisjointMec"}))
            expect(icc.capacity / mec.capacity).to(be_within(1.93, 2.03))
            expect(icc.replications).to(equal(0))

        with it('reports the analytic satisfaction at the configured arrival rate'):
            metrics = runScenario(Factory.create_config({"mode": "theory", "logLevel": 0}))
            expect(metrics.satisfactionRate).to(be_within(0.947723, 0.947725))

        with it('raises at an unstable arrival rate'):
            config = Factory.create_config({"mode": "theory", "logLevel": 0, "ue.count": 100})
            expect(lambda: runScenario(config)).to(raise_error(UnstableSystemError))

        with it('reports no satisfaction at an unstable rate when allowed'):
            config = Factory.create_config({"mode": "theory", "logLevel": 0, "ue.count": 120})
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always")
                metrics = runScenario(config, allowUnstable=True)
            expect(metrics.satisfactionRate).to(be_none)
            expect(metrics.capacity).to(be_above(59.0))
            expect(any(issubclass(w.category, UnstableGridPointWarning) for w in caught)).to(be_true)

    with context('simulation'):
        with it('reports no satisfaction without UEs'):
            config = ScenarioConfig().withOverrides({"logLevel": 0, "ue.count": 0, "simulation.replications": 2})
            metrics = runScenario(config)
            expect(metrics.jobsTotal).to(equal(0))
            expect(metrics.satisfactionRate).to(be_none)
            expect(metrics.satisfactionRateHalfWidth).to(be_none)

        with it('reproduces a replication from its seed'):
            config = Factory.create_small_config()
            first, _ = runReplication(config, 0)
            second, _ = runReplication(config, 0)
            other, _ = runReplication(config, 1)
            expect(first.asRow()).to(equal(second.asRow()))
            expect(first.asRow() == other.asRow()).to(equal(False))

        with it('conserves the measured jobs'):
            metrics, simulator = runReplication(Factory.create_small_config({"simulation.drain": False}), 0)
            expect(metrics.jobsTotal + metrics.jobsInFlight).to(equal(metrics.jobsGenerated))
            expect(metrics.jobsSatisfied + metrics.jobsUnsatisfied + metrics.jobsDropped).to(equal(metrics.jobsTotal))

        with it('drains every job when asked to'):
            metrics, simulator = runReplication(Factory.create_small_config(), 0)
            expect(metrics.jobsInFlight).to(equal(0))
            expect(simulator.clock).to(be_above_or_equal(simulator.horizon * 0.9))

        with it('pools the replications with a half-width'):
            metrics = runScenario(Factory.create_small_config({"simulation.replications": 3}))
            expect(metrics.replications).to(equal(3))
            expect(metrics.replicationMetrics).to(have_length(3))
            expect(metrics.jobsTotal).to(equal(sum(run.jobsTotal for run in metrics.replicationMetrics)))
            expect(metrics.satisfactionRateHalfWidth).not_to(be_none)

        with it('folds the timing of every replication into the context timer'):
            experiment = MagicMock(executionTimer=Timer(None), logger=Logger(None, logLevel=0))
            runScenario(Factory.create_small_config({"simulation.replications": 3}), context=experiment)
            performance = experiment.executionTimer.performance
            expect(performance["runScenario"]["calls"]).to(equal(1))
            expect(performance["runReplication"]["calls"]).to(equal(3))
            expect(performance["Simulator.runUntil"]["calls"]).to(equal(3))
            expect(performance["runScenario"]["elapsedTotal"]).to(be_above_or_equal(performance["runReplication"]["elapsedMax"]))

        with it('satisfies fewer jobs as the arrival rate grows'):
            results = sharedSweep("arrival", arrivalSweep)
            for name in ARCHITECTURES:
                rates = [row.satisfactionRate for row in results[name].rows]
                for earlier, later in zip(rates, rates[1:]):
                    expect(later).to(be_below_or_equal(earlier + 0.01))

        with it('orders the capacities of the three architectures'):
            results = sharedSweep("arrival", arrivalSweep)
            icc, ran, mec = (results[name].capacity for name in ARCHITECTURES)
            expect(mec).not_to(be_none)
            expect(icc).to(be_above_or_equal(ran))
            expect(ran).to(be_above_or_equal(mec))
            expect(icc).to(be_above_or_equal(1.2 * mec))

        with it('never satisfies more jobs behind the core than in the RAN'):
            results = sharedSweep("arrival", arrivalSweep)
            for ran, mec in zip(results["DisjointRan"].rows, results["DisjointMec"].rows):
                expect(mec.satisfactionRate).to(be_below_or_equal(ran.satisfactionRate))

    with context('GPU sweep'):
        with it('satisfies more jobs with more GPUs'):
            results = sharedSweep("gpu", gpuSweep)
            for name in ARCHITECTURES:
                rates = [row.satisfactionRate for row in results[name].rows]
                for earlier, later in zip(rates, rates[1:]):
                    expect(later).to(be_above_or_equal(earlier))

        with it('narrows the gap between joint and disjoint management'):
            results = sharedSweep("gpu", gpuSweep)
            gaps = [
                (icc.satisfactionRate, ran.satisfactionRate)
                for icc, ran in zip(results["IccRan"].rows, results["DisjointRan"].rows)
            ]
            unsaturated = [icc - ran for icc, ran in gaps if icc < 0.999 and ran < 0.999]
            expect(unsaturated).not_to(have_length(0))
            largest = gaps[-1][0] - gaps[-1][1]
            expect(largest).to(be_below(unsaturated[0]))

    with context('validation'):
        with it('forces the exponential tandem without background traffic'):
            config = validationConfig(ScenarioConfig.load(os.path.join(SCENARIOS, "validate.yaml")).withOverrides({
                "ue.jobRate": 50.0,
            }))
            expect(config.mode).to(equal(ScenarioMode.Simulation))
            expect(config.get("uplink.mode")).to(equal("ExponentialJob"))
            expect(config.get("compute.service")).to(equal("ExponentialJob"))
            expect(config.get("ue.backgroundRate")).to(equal(0.0))
            expect(config.architectureOverrides["queueDiscipline"]).to(equal("Fcfs"))
            expect(config.arrivalRate * (config.horizon - config.warmup)).to(be_above(100000))

        with it('refuses an unstable validation point'):
            config = ScenarioConfig().withOverrides({"mode": "validate", "logLevel": 0, "ue.count": 1, "ue.jobRate": 100.0})
            expect(lambda: runScenario(config)).to(raise_error(UnstableSystemError))

        with it('matches the analytic joint satisfaction'):
            for row in sharedSweep("validation", validationSweep)["DisjointRan"].rows:
                report = row.validation
                sigma = max(report["batchSigmaJoint"], report["binomialSigmaJoint"])
                expect(report["jobs"]).to(be_above_or_equal(100000))
                expect(abs(report["empiricalJoint"] - report["analyticJoint"])).to(be_below_or_equal(3 * sigma))

        with it('matches the analytic disjoint satisfaction'):
            for row in sharedSweep("validation", validationSweep)["DisjointRan"].rows:
                report = row.validation
                sigma = max(report["batchSigmaDisjoint"], report["binomialSigmaDisjoint"])
                expect(abs(report["empiricalDisjoint"] - report["analyticDisjoint"])).to(be_below_or_equal(3 * sigma))

        with it('finds the two stage sojourns uncorrelated'):
            for row in sharedSweep("validation", validationSweep)["DisjointRan"].rows:
                expect(abs(row.validation["pearsonAirComp"])).to(be_below(0.01))

        with it('finds an exponential air sojourn'):
            row, = [row for row in sharedSweep("validation", validationSweep)["DisjointRan"].rows if row.axisValue == 50.0]
            expect(row.validation["ksStatistic"]).to(be_below(1.63 / math.sqrt(row.validation["jobs"])))

    with context('standard errors'):
        with it('computes the binomial standard error'):
            expect(binomialSigma(0.5, 100)).to(be_within(0.0499999, 0.0500001))
            expect(binomialSigma(0.5, 0)).to(be_none)

        with it('computes the batch means standard error'):
            expect(batchMeansSigma([1, 0] * 50, 10)).to(equal(0.0))
            expect(batchMeansSigma([1, 0, 1], 10)).to(be_none)
