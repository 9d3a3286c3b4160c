import os
import sys
import argparse

import yaml

import Architecture
from Harness.ResultsStore import emitCsv
from Harness.Scenario import runScenario
from Harness.ScenarioConfig import ScenarioConfig, ScenarioMode, SweepAxis
from Harness.Sweep import SweepSpec, runSweep, sweepRows
from Tools.Exceptions import ConfigurationError, SimulationError, UnstableSystemError
from Tools.Logger import Logger
from Tools.Timer import Timer


"""
Experiment structure:

1. The command line is parsed and merged with the ICCSIM_* environment variables and the YAML scenario file
   (flag > environment > file > defaults) into one ScenarioConfig.
2. Each subcommand picks the mode and the architectures:
    - theory:   analytic capacity of every preset (or the analytic curve when the config has a sweep grid)
    - sim:      simulation of one scenario, replications aggregated with confidence half-widths
    - sweep:    one scenario per grid point and per preset, with the empirical capacity of every preset
    - validate: exponential tandem simulation against the analytic satisfaction
3. The rows are written as CSV to --out (stdout when absent) and a summary table goes to the log (stderr).

Exit codes: 0 success, 1 configuration error, 2 runtime error.
"""

# Option -> (environment variable, config key or None, type)
OPTIONS = {
    "config": ("ICCSIM_CONFIG", None, str),
    "seed": ("ICCSIM_SEED", "simulation.seed", int),
    "out": ("ICCSIM_OUT", None, str),
    "alpha": ("ICCSIM_ALPHA", "alpha", float),
    "replications": ("ICCSIM_REPLICATIONS", "simulation.replications", int),
    "workers": ("ICCSIM_WORKERS", "simulation.workers", int),
    "logLevel": ("ICCSIM_LOG_LEVEL", "logLevel", int),
}

# Columns of the summary table printed to the log
SUMMARY_COLUMNS = ("architecture", "axisValue", "jobsTotal", "satisfactionRate", "satisfactionRateHalfWidth", "meanE2e", "capacity")


class CentralExperiment:
    """
    Context of a command line run: the logger, the execution timer and the scenario configuration.
    """

    def __init__(self, config, showExecutionStats=False):
        self.config = config
        self.logLevel = config.logLevel
        self.logger = Logger(self, className=type(self).__name__, logLevel=self.logLevel)
        self.executionTimer = Timer(self)
        # Show the execution statistics
        self.showExecutionStats = showExecutionStats

    def Log(self, message):
        print(message, file=sys.stderr)

    def theory(self, architectures):
        config = self.config.withOverrides({"mode": ScenarioMode.Theory.value})
        if config.get("sweep.grid"):
            return sweepRows(runSweep(config, architectures=architectures, context=self))

        rows = [
            runScenario(config.withOverrides({"architecture": name}), context=self, allowUnstable=True)
            for name in architectures
        ]
        capacities = {row.architecture: row.capacity for row in rows}
        if capacities.get("DisjointMec"):
            for name in ("IccRan", "DisjointRan"):
                if name in capacities:
                    self.logger.info(f"{name} / DisjointMec capacity gain: {capacities[name] / capacities['DisjointMec']:.4f}")
        return rows

    def simulate(self, architectures):
        config = self.config.withOverrides({"mode": ScenarioMode.Simulation.value})
        return [runScenario(config.withOverrides({"architecture": name}), context=self) for name in architectures]

    def sweep(self, architectures):
        config = self.config
        if config.mode is ScenarioMode.Validate:
            config = config.withOverrides({"mode": ScenarioMode.Simulation.value})
        return sweepRows(runSweep(config, SweepSpec.fromConfig(config), architectures=architectures, context=self))

    def validate(self, architectures):
        config = self.config.withOverrides({"mode": ScenarioMode.Validate.value})
        if config.get("sweep.grid") and SweepAxis(config.get("sweep.axis")) is SweepAxis.JobRate:
            return sweepRows(runSweep(config, architectures=architectures, context=self))
        return [runScenario(config.withOverrides({"architecture": name}), context=self) for name in architectures]

    def OnEndOfExperiment(self, rows):
        self.logger.dataframe([{key: row[key] for key in SUMMARY_COLUMNS} for row in rows])
        if self.showExecutionStats:
            self.Log("")
            self.Log("---------------------------------")
            self.Log("     Execution  Statistics       ")
            self.Log("---------------------------------")
            self.executionTimer.showStats()
            self.Log("")


class ExperimentParser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with status 1, the configuration error status."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def buildParser():
    parser = ExperimentParser(prog="iccsim", description="ICC vs 5G MEC capacity of LLM job offloading")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML scenario file")
    common.add_argument("--seed", type=int, help="master seed")
    common.add_argument("--out", help="CSV output path (stdout when absent)")
    common.add_argument("--alpha", type=float, help="satisfaction target of the capacity")
    common.add_argument("--replications", type=int, help="replications per scenario")
    common.add_argument("--workers", type=int, help="worker processes")
    common.add_argument("--architecture", nargs="+", choices=list(Architecture.PRESETS), help="presets to run")
    common.add_argument("--log-level", dest="logLevel", type=int, help="0 = ERROR ... 4 = TRACE")
    common.add_argument("--stats", action="store_true", help="print the execution statistics")

    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("theory", parents=[common], help="analytic capacity and satisfaction curves")
    commands.add_parser("sim", parents=[common], help="simulate one scenario")
    commands.add_parser("sweep", parents=[common], help="sweep ueCount, jobRate or gpuCount")
    commands.add_parser("validate", parents=[common], help="check the simulator against the analytic model")
    return parser


def resolveOptions(args, environ=None):
    """
    Merges the flags with the ICCSIM_* environment variables. A flag wins over its variable.
    """
    environ = os.environ if environ is None else environ
    options = {}
    for name, (variable, _, cast) in OPTIONS.items():
        value = getattr(args, name, None)
        if value is None and environ.get(variable) not in (None, ""):
            try:
                value = cast(environ[variable])
            except ValueError:
                raise ConfigurationError(f"{variable} must be a {cast.__name__}, got {environ[variable]!r}") from None
        options[name] = value
    return options


def loadConfig(options):
    config = ScenarioConfig.load(options["config"]) if options["config"] else ScenarioConfig()
    overrides = {key: options[name] for name, (_, key, _) in OPTIONS.items() if key and options[name] is not None}
    return config.withOverrides(overrides) if overrides else config


def main(argv=None, environ=None):
    args = buildParser().parse_args(argv)
    logger = Logger(None, className="main", logLevel=1)
    try:
        options = resolveOptions(args, environ)
        config = loadConfig(options)
        experiment = CentralExperiment(config, showExecutionStats=args.stats)

        if args.architecture:
            architectures = args.architecture
        elif args.command in ("theory", "sweep"):
            architectures = list(Architecture.PRESETS)
        else:
            architectures = [config.architecture]

        experiment.executionTimer.start(args.command)
        rows = getattr(experiment, {"sim": "simulate"}.get(args.command, args.command))(architectures)
        experiment.executionTimer.stop(args.command)

        emitCsv(rows, options["out"] or sys.stdout)
        experiment.OnEndOfExperiment(rows)
    except (ConfigurationError, yaml.YAMLError) as e:
        logger.error(f"configuration error: {e}")
        return 1
    except (SimulationError, UnstableSystemError, ValueError, OSError, RuntimeError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
