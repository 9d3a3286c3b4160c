import dataclasses
from dataclasses import dataclass

from Tools.DataRecord import DataRecord


@dataclass
class GpuSpec(DataRecord):
    """
    Roofline parameters of the computing node: `count` identical GPUs whose bandwidths add up linearly.

    Attributes:
        name (str): catalog key.
        compBw (float): compute throughput of one GPU (FLOP/s).
        memBw (float): memory bandwidth of one GPU (bytes/s).
        count (int): number of GPUs.
    """
    name: str = ""
    compBw: float = 0.0
    memBw: float = 0.0
    count: int = 1

    def __post_init__(self):
        validate(self)

    @property
    def effectiveCompBw(self):
        return self.compBw * self.count

    @property
    def effectiveMemBw(self):
        return self.memBw * self.count

    def withCount(self, count):
        return dataclasses.replace(self, count=count)


def validate(gpu):
    if gpu.compBw <= 0 or gpu.memBw <= 0:
        raise ValueError(f"GPU bandwidths must be > 0, got compBw={gpu.compBw}, memBw={gpu.memBw}")
    if int(gpu.count) != gpu.count or gpu.count < 1:
        raise ValueError(f"GPU count must be an integer >= 1, got {gpu.count}")
