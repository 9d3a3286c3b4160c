from Analytic.Parameters import BudgetSplit, ManagementPolicy
from Compute.ComputeQueue import QueueDiscipline
from Compute.SatisfactionRule import SatisfactionRule
from Tools.Exceptions import ConfigurationError


class Base:
    """
    Deployment preset: where the computing node sits and how the latency budget is managed there. A preset fully
    determines the wireline delay, the management policy, the queue discipline, the drop policy and the packet priority.
    Every key can be overridden per scenario.

    Attributes:
        DEFAULT_PARAMETERS (dict): the keys every preset resolves.
    """
    DEFAULT_PARAMETERS = {
        # Constant wired delay from the RAN to the computing node (seconds)
        "wireline": 0.005,
        # Joint: one end-to-end budget. Disjoint: separate communication and computing budgets
        "policy": ManagementPolicy.Disjoint,
        # Communication budget under disjoint management, wireline included (seconds)
        "budgetComm": 0.024,
        # Computing budget under disjoint management (seconds)
        "budgetComp": 0.056,
        # Fcfs or SlackPriority (key = genTime + bTotal - observed communication latency)
        "queueDiscipline": QueueDiscipline.Fcfs,
        # Drop the jobs expected to complete after their deadline
        "dropJobs": False,
        # Serve job packets before background packets on the uplink
        "packetPriority": False,
        # Repeat the drop check when a job leaves the computing queue
        "reevaluateDrops": False,
    }

    def __init__(self, **overrides):
        unknown = set(overrides) - set(self.getMergedParameters())
        if unknown:
            raise ConfigurationError(f"Unknown {self.name} override keys: {sorted(unknown)}")
        for key, value in {**self.getMergedParameters(), **overrides}.items():
            setattr(self, key, value)
        try:
            self.policy = ManagementPolicy.parse(self.policy)
            self.queueDiscipline = QueueDiscipline.parse(self.queueDiscipline)
        except ValueError as e:
            raise ConfigurationError(f"{self.name}: {e}") from e
        for key in ("dropJobs", "packetPriority", "reevaluateDrops"):
            if not isinstance(getattr(self, key), bool):
                raise ConfigurationError(f"{self.name}: {key} must be true or false, got {getattr(self, key)!r}")
        for key in ("wireline", "budgetComm", "budgetComp"):
            value = getattr(self, key)
            if not isinstance(value, (int, float)) or isinstance(value, bool) or value < 0:
                raise ConfigurationError(f"{self.name}: {key} must be a number >= 0, got {value!r}")

    @classmethod
    def getMergedParameters(cls):
        """
        Merges default parameters with any additional parameters defined in derived classes.

        Returns:
            dict: A dictionary containing the merged parameters.
        """
        return {**cls.DEFAULT_PARAMETERS, **getattr(cls, "PARAMETERS", {})}

    @classmethod
    def parameter(cls, key, default=None):
        return cls.getMergedParameters().get(key, default)

    @property
    def name(self):
        return self.__class__.__name__

    def budgetSplit(self, total):
        return BudgetSplit(total=total, comm=self.budgetComm, comp=self.budgetComp, wireline=self.wireline)

    def satisfactionRule(self, total):
        return SatisfactionRule(self.policy, self.budgetSplit(total))

    def asdict(self):
        values = {key: getattr(self, key) for key in self.getMergedParameters()}
        values["policy"] = self.policy.value
        values["queueDiscipline"] = self.queueDiscipline.value
        return values
