from Analytic.Parameters import ManagementPolicy
from Architecture.Base import Base
from Compute.ComputeQueue import QueueDiscipline


class IccRan(Base):
    """
    Integrated communication and computing: the computing node sits in the RAN and both latencies share one budget.
    """
    PARAMETERS = {
        "wireline": 0.005,
        "policy": ManagementPolicy.Joint,
        "queueDiscipline": QueueDiscipline.SlackPriority,
        "dropJobs": True,
        "packetPriority": True,
    }
