import os
import yaml

from Tools.Exceptions import ConfigurationError
from Workload.GpuSpec import GpuSpec
from Workload.LlmModel import LlmModel


class HardwareCatalog:
    """
    GPU and LLM entries read from a YAML file:

        gpus:
          a100: {compBw: 3.12e+14, memBw: 2.039e+12, source: "..."}
        models:
          llama-2-7b-fp16: {paramCount: 7.0e+9, bytesPerParam: 2}
    """
    GPU_KEYS = ("compBw", "memBw", "source")
    MODEL_KEYS = ("paramCount", "bytesPerParam", "cLlm", "mLlm", "source")

    def __init__(self, gpus=None, models=None, path=None):
        self.gpus = gpus or {}
        self.models = models or {}
        self.path = path

    @classmethod
    def load(cls, path):
        if not os.path.isfile(path):
            raise ConfigurationError(f"Hardware file not found: {path}")
        try:
            with open(path, "r", encoding="utf-8") as handle:
                data = yaml.safe_load(handle) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Malformed hardware file {path}: {e}") from e

        if not isinstance(data, dict) or set(data) - {"gpus", "models"}:
            raise ConfigurationError(f"Hardware file {path} must only contain the 'gpus' and 'models' sections")
        return cls(gpus=data.get("gpus") or {}, models=data.get("models") or {}, path=path)

    def gpu(self, name, count=1):
        entry = self._entry(self.gpus, name, "GPU", self.GPU_KEYS)
        try:
            return GpuSpec(name=name, compBw=float(entry["compBw"]), memBw=float(entry["memBw"]), count=int(count))
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigurationError(f"Invalid GPU entry '{name}': {e}") from e

    def model(self, name):
        entry = self._entry(self.models, name, "model", self.MODEL_KEYS)
        try:
            return LlmModel(
                name=name,
                paramCount=int(float(entry["paramCount"])),
                bytesPerParam=float(entry.get("bytesPerParam", 2)),
                cLlm=None if entry.get("cLlm") is None else float(entry["cLlm"]),
                mLlm=None if entry.get("mLlm") is None else float(entry["mLlm"]),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigurationError(f"Invalid model entry '{name}': {e}") from e

    def _entry(self, section, name, label, allowed):
        if name not in section:
            raise ConfigurationError(f"Unknown {label} '{name}'. Available: {sorted(section)}")
        entry = section[name] or {}
        unknown = set(entry) - set(allowed)
        if unknown:
            raise ConfigurationError(f"Unknown keys {sorted(unknown)} in {label} entry '{name}'")
        return entry
