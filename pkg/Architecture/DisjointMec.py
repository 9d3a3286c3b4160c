from Analytic.Parameters import ManagementPolicy
from Architecture.Base import Base
from Compute.ComputeQueue import QueueDiscipline


class DisjointMec(Base):
    """
    5G MEC baseline: the computing node sits behind the core network (longer wireline) with disjoint budgets.
    """
    PARAMETERS = {
        "wireline": 0.020,
        "policy": ManagementPolicy.Disjoint,
        "queueDiscipline": QueueDiscipline.Fcfs,
        "dropJobs": False,
        "packetPriority": False,
    }
