import math
import dataclasses
from enum import Enum
from dataclasses import dataclass
from typing import Optional

from Tools.DataRecord import DataRecord


class ManagementPolicy(Enum):
    """
    How the latency budget of a job is enforced.

    Joint: a single end-to-end budget covers communication and computing.
    Disjoint: the communication and the computing budgets must each be met.
    """
    Joint = "Joint"
    Disjoint = "Disjoint"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value))
        except ValueError:
            raise ValueError(f"Unknown management policy '{value}'. Expected one of {[p.value for p in cls]}") from None


def requireFinite(**values):
    for name, value in values.items():
        if value is None or not math.isfinite(value):
            raise ValueError(f"{name} must be a finite number, got {value!r}")


@dataclass
class SystemRates(DataRecord):
    """
    Rates of the two stage tandem queue.

    Attributes:
        lam (float): Poisson job arrival rate (jobs/second).
        mu1 (float): air-interface service rate (jobs/second).
        mu2 (float): computing node service rate (jobs/second).
    """
    lam: float = 0.0
    mu1: float = 900.0
    mu2: float = 100.0

    def __post_init__(self):
        requireFinite(lam=self.lam, mu1=self.mu1, mu2=self.mu2)
        if self.lam < 0:
            raise ValueError(f"lam must be >= 0, got {self.lam}")
        if self.mu1 <= 0 or self.mu2 <= 0:
            raise ValueError(f"Service rates must be > 0, got mu1={self.mu1}, mu2={self.mu2}")

    @property
    def minRate(self):
        return min(self.mu1, self.mu2)

    @property
    def isStable(self):
        return self.lam < self.minRate

    def withLambda(self, lam):
        return dataclasses.replace(self, lam=lam)


@dataclass
class BudgetSplit(DataRecord):
    """
    Latency budget of a job (seconds).

    Attributes:
        total (float): end-to-end budget b_total.
        comm (float): communication budget, wireline included (disjoint management only).
        comp (float): computing budget (disjoint management only).
        wireline (float): constant wireline delay between the RAN and the computing node.
    """
    total: float = 0.080
    comm: Optional[float] = 0.024
    comp: Optional[float] = 0.056
    wireline: float = 0.005

    def __post_init__(self):
        requireFinite(total=self.total, wireline=self.wireline)
        if self.total <= 0:
            raise ValueError(f"total budget must be > 0, got {self.total}")
        if self.wireline < 0:
            raise ValueError(f"wireline delay must be >= 0, got {self.wireline}")
        for name in ("comm", "comp"):
            value = self[name]
            if value is not None:
                requireFinite(**{name: value})
                if value < 0:
                    raise ValueError(f"{name} budget must be >= 0, got {value}")

    @property
    def remaining(self):
        """Budget left once the wireline delay is paid."""
        return self.total - self.wireline

    @property
    def isSplit(self):
        return self.comm is not None and self.comp is not None
