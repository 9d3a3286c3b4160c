import math
import numpy as np

# Substreams in derivation order. New streams are appended so that existing ones keep their seeds.
STREAM_NAMES = ("arrivals", "service", "placement", "uplink", "background")


def poissonInterarrival(generator, rate, size=None):
    """
    Exponential inter-arrival time(s) with mean 1/rate drawn from `generator`.
    """
    if rate is None or not math.isfinite(rate) or rate <= 0:
        raise ValueError(f"rate must be finite and > 0, got {rate}")
    if size is None:
        return float(generator.exponential(1.0 / rate))
    return generator.exponential(1.0 / rate, size=size)


class RngStreams:
    """
    Independent random streams of one replication.

    The stream at position `index` of STREAM_NAMES for replication `replication` is
        Generator(SFC64(SeedSequence(masterSeed, spawn_key=(replication, index))))
    so identical (masterSeed, replication) pairs reproduce every draw bit for bit, and changing the use of one stream
    never shifts the draws of another.
    """

    def __init__(self, masterSeed, replication=0):
        if int(masterSeed) != masterSeed or not 0 <= masterSeed < 2 ** 64:
            raise ValueError(f"masterSeed must be an unsigned 64-bit integer, got {masterSeed}")
        if int(replication) != replication or replication < 0:
            raise ValueError(f"replication must be an integer >= 0, got {replication}")
        self.masterSeed = int(masterSeed)
        self.replication = int(replication)
        self.generators = {
            name: np.random.Generator(
                np.random.SFC64(np.random.SeedSequence(self.masterSeed, spawn_key=(self.replication, index)))
            )
            for index, name in enumerate(STREAM_NAMES)
        }

    def stream(self, name):
        try:
            return self.generators[name]
        except KeyError:
            raise ValueError(f"Unknown random stream '{name}'. Available: {list(STREAM_NAMES)}") from None

    def poissonInterarrival(self, name, rate):
        return poissonInterarrival(self.stream(name), rate)

    def exponential(self, name, rate):
        """Exponential variate with the given rate, e.g. a service time."""
        return poissonInterarrival(self.stream(name), rate)

    def integer(self, name, high):
        return int(self.stream(name).integers(high))
