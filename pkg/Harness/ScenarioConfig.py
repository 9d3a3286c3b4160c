import os
import copy
import math
from enum import Enum

import yaml

from Tools.Exceptions import ConfigurationError

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


class ScenarioMode(Enum):
    Theory = "theory"
    Simulation = "simulation"
    Validate = "validate"


class SweepAxis(Enum):
    UeCount = "ueCount"
    JobRate = "jobRate"
    GpuCount = "gpuCount"


class ScenarioConfig:
    """
    Scenario parameters. A YAML file is deep-merged onto DEFAULT_PARAMETERS; any key that is not part of the defaults is
    rejected. Values are read with dotted paths:

        config = ScenarioConfig.load("Data/scenarios/arrival_sweep.yaml")
        config.get("ue.count")
        config.withOverrides({"simulation.seed": 7})

    The object only holds plain values so it can be shipped to worker processes.
    """
    DEFAULT_PARAMETERS = {
        # theory | simulation | validate
        "mode": "simulation",
        # IccRan | DisjointRan | DisjointMec
        "architecture": "IccRan",
        # Preset keys to override (wireline, policy, budgetComm, budgetComp, queueDiscipline, dropJobs,
        # packetPriority, reevaluateDrops)
        "architectureOverrides": {},
        # Target satisfaction probability of the service capacity
        "alpha": 0.95,
        # 0 = ERROR, 1 = WARNING, 2 = INFO, 3 = DEBUG, 4 = TRACE
        "logLevel": 1,
        "rates": {
            # Air-interface service rate (jobs/second): analytic model and ExponentialJob uplink
            "mu1": 900.0,
            # Computing service rate (jobs/second): analytic model and ExponentialJob service
            "mu2": 100.0,
        },
        "budget": {
            # End-to-end latency budget b_total (seconds)
            "total": 0.080,
        },
        "ue": {
            "count": 60,
            # Prompts per second per UE
            "jobRate": 1.0,
            # Background load per UE (bits/second)
            "backgroundRate": 5.0e5,
            "backgroundPacketBits": 24000,
        },
        "job": {
            "nInput": 15,
            "nOutput": 15,
        },
        "uplink": {
            # PacketShared | ExponentialJob
            "mode": "PacketShared",
            # Aggregate uplink capacity (bits/second), PacketShared only
            "capacity": 3.2e7,
            "bytesPerToken": 4,
            "maxPacketBits": 12000,
        },
        "compute": {
            # LlmRoofline | ExponentialJob
            "service": "LlmRoofline",
            "model": "llama-2-7b-fp16",
            "gpu": "gh200-nvl2",
            "gpuCount": 2,
        },
        # GPU and LLM catalog, relative paths are tried from the working directory then from the project root
        "hardwareFile": "Data/hardware.yaml",
        "simulation": {
            # Arrivals are generated until the horizon (seconds)
            "horizon": 200.0,
            # Jobs generated before the warm-up are not measured (null = 10% of the horizon)
            "warmup": None,
            "replications": 5,
            "seed": 2024,
            # Worker processes for replications and sweep points (1 = in process)
            "workers": 1,
            # Keep running after the horizon until every generated job has finished
            "drain": True,
        },
        "validation": {
            # Measured jobs per validation point
            "targetJobs": 100000,
            # Batches of the batch-means standard error
            "batches": 50,
        },
        "sweep": {
            # ueCount | jobRate | gpuCount
            "axis": "ueCount",
            # Strictly increasing axis values
            "grid": [],
            # Interpolate the capacity between the last grid point meeting alpha and the next one
            "interpolate": False,
        },
    }

    # Keys whose value is a free-form mapping checked elsewhere
    FREE_MAPPINGS = ("architectureOverrides",)

    def __init__(self, values=None, source=None):
        self.source = source
        self.values = copy.deepcopy(self.DEFAULT_PARAMETERS)
        _merge(self.values, values or {}, self.FREE_MAPPINGS)
        self.validate()

    @classmethod
    def load(cls, path):
        try:
            with open(path, "r", encoding="utf-8") as handle:
                data = yaml.safe_load(handle)
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Malformed configuration file {path}: {e}") from e
        except OSError as e:
            raise ConfigurationError(f"Cannot read configuration file {path}: {e}") from e
        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise ConfigurationError(f"Configuration file {path} must contain a mapping at the top level")
        return cls(data, source=path)

    def get(self, path):
        node = self.values
        for part in path.split("."):
            if not isinstance(node, dict) or part not in node:
                raise ConfigurationError(f"Unknown configuration key '{path}'")
            node = node[part]
        return node

    def __getitem__(self, path):
        return self.get(path)

    def withOverrides(self, overrides):
        """
        Returns a new config with the dotted-path overrides applied, e.g. {"ue.count": 70}.
        """
        values = copy.deepcopy(self.values)
        for path, value in overrides.items():
            node = values
            parts = path.split(".")
            for part in parts[:-1]:
                if not isinstance(node.get(part), dict):
                    raise ConfigurationError(f"Unknown configuration key '{path}'")
                node = node[part]
            if parts[-1] not in node:
                raise ConfigurationError(f"Unknown configuration key '{path}'")
            node[parts[-1]] = value
        return ScenarioConfig(values, source=self.source)

    def asdict(self):
        return copy.deepcopy(self.values)

    @property
    def mode(self):
        return ScenarioMode(self.get("mode"))

    @property
    def architecture(self):
        return self.get("architecture")

    @property
    def architectureOverrides(self):
        return dict(self.get("architectureOverrides") or {})

    @property
    def alpha(self):
        return float(self.get("alpha"))

    @property
    def logLevel(self):
        return int(self.get("logLevel"))

    @property
    def horizon(self):
        return float(self.get("simulation.horizon"))

    @property
    def warmup(self):
        warmup = self.get("simulation.warmup")
        return 0.1 * self.horizon if warmup is None else float(warmup)

    @property
    def replications(self):
        return int(self.get("simulation.replications"))

    @property
    def seed(self):
        return int(self.get("simulation.seed"))

    @property
    def workers(self):
        return int(self.get("simulation.workers"))

    @property
    def drain(self):
        return bool(self.get("simulation.drain"))

    @property
    def arrivalRate(self):
        return self.get("ue.count") * float(self.get("ue.jobRate"))

    @property
    def hardwarePath(self):
        path = self.get("hardwareFile")
        if os.path.isabs(path) or os.path.isfile(path):
            return path
        candidates = []
        if self.source:
            candidates.append(os.path.join(os.path.dirname(os.path.abspath(self.source)), path))
        candidates.append(os.path.join(PROJECT_ROOT, path))
        for candidate in candidates:
            if os.path.isfile(candidate):
                return candidate
        return path

    def validate(self):
        v = self.values
        _choice("mode", v["mode"], [m.value for m in ScenarioMode])
        _choice("architecture", v["architecture"], ["IccRan", "DisjointRan", "DisjointMec"])
        if not isinstance(v["architectureOverrides"], dict):
            raise ConfigurationError("architectureOverrides must be a mapping")
        v["alpha"] = _number("alpha", v["alpha"], low=0.0, high=1.0, openLow=True, openHigh=True)
        _integer("logLevel", v["logLevel"], low=0)
        v["rates"]["mu1"] = _number("rates.mu1", v["rates"]["mu1"], low=0.0, openLow=True)
        v["rates"]["mu2"] = _number("rates.mu2", v["rates"]["mu2"], low=0.0, openLow=True)
        v["budget"]["total"] = _number("budget.total", v["budget"]["total"], low=0.0, openLow=True)
        _integer("ue.count", v["ue"]["count"], low=0)
        v["ue"]["jobRate"] = _number("ue.jobRate", v["ue"]["jobRate"], low=0.0)
        v["ue"]["backgroundRate"] = _number("ue.backgroundRate", v["ue"]["backgroundRate"], low=0.0)
        v["ue"]["backgroundPacketBits"] = _number("ue.backgroundPacketBits", v["ue"]["backgroundPacketBits"], low=0.0, openLow=True)
        _integer("job.nInput", v["job"]["nInput"], low=1)
        _integer("job.nOutput", v["job"]["nOutput"], low=0)
        _choice("uplink.mode", v["uplink"]["mode"], ["PacketShared", "ExponentialJob"])
        v["uplink"]["capacity"] = _number("uplink.capacity", v["uplink"]["capacity"], low=0.0, openLow=True)
        v["uplink"]["bytesPerToken"] = _number("uplink.bytesPerToken", v["uplink"]["bytesPerToken"], low=0.0, openLow=True)
        _integer("uplink.maxPacketBits", v["uplink"]["maxPacketBits"], low=1)
        _choice("compute.service", v["compute"]["service"], ["LlmRoofline", "ExponentialJob"])
        _integer("compute.gpuCount", v["compute"]["gpuCount"], low=1)
        v["simulation"]["horizon"] = _number("simulation.horizon", v["simulation"]["horizon"], low=0.0, openLow=True)
        if v["simulation"]["warmup"] is not None:
            v["simulation"]["warmup"] = _number("simulation.warmup", v["simulation"]["warmup"], low=0.0)
            if float(v["simulation"]["warmup"]) >= float(v["simulation"]["horizon"]):
                raise ConfigurationError("simulation.warmup must be shorter than simulation.horizon")
        _integer("simulation.replications", v["simulation"]["replications"], low=1)
        _integer("simulation.seed", v["simulation"]["seed"], low=0, high=2 ** 64 - 1)
        _integer("simulation.workers", v["simulation"]["workers"], low=1)
        if not isinstance(v["simulation"]["drain"], bool):
            raise ConfigurationError("simulation.drain must be true or false")
        _integer("validation.targetJobs", v["validation"]["targetJobs"], low=1)
        _integer("validation.batches", v["validation"]["batches"], low=2)
        _choice("sweep.axis", v["sweep"]["axis"], [a.value for a in SweepAxis])
        if not isinstance(v["sweep"]["grid"], list):
            raise ConfigurationError("sweep.grid must be a list")
        v["sweep"]["grid"] = [_number("sweep.grid", value) for value in v["sweep"]["grid"]]
        if not isinstance(v["sweep"]["interpolate"], bool):
            raise ConfigurationError("sweep.interpolate must be true or false")


def _merge(target, overrides, freeMappings=(), path=""):
    if not isinstance(overrides, dict):
        raise ConfigurationError(f"Expected a mapping at '{path or '<root>'}', got {type(overrides).__name__}")
    for key, value in overrides.items():
        where = f"{path}{key}"
        if key not in target:
            raise ConfigurationError(f"Unknown configuration key '{where}'")
        if isinstance(target[key], dict) and key not in freeMappings:
            if not isinstance(value, dict):
                raise ConfigurationError(f"Configuration key '{where}' must be a mapping")
            _merge(target[key], value, freeMappings, where + ".")
        else:
            target[key] = value


def _choice(name, value, choices):
    if value not in choices:
        raise ConfigurationError(f"{name} must be one of {choices}, got {value!r}")


def _number(name, value, low=None, high=None, openLow=False, openHigh=False):
    if isinstance(value, str):
        # YAML 1.1 reads exponents without a dot or sign (3e7) as strings
        try:
            value = float(value)
        except ValueError:
            raise ConfigurationError(f"{name} must be a number, got {value!r}") from None
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ConfigurationError(f"{name} must be a finite number, got {value!r}")
    if low is not None and (value < low or (openLow and value == low)):
        raise ConfigurationError(f"{name} must be {'>' if openLow else '>='} {low}, got {value}")
    if high is not None and (value > high or (openHigh and value == high)):
        raise ConfigurationError(f"{name} must be {'<' if openHigh else '<='} {high}, got {value}")
    return value


def _integer(name, value, low=None, high=None):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigurationError(f"{name} must be an integer, got {value!r}")
    return _number(name, value, low=low, high=high)
