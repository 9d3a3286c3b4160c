from Analytic.Parameters import ManagementPolicy
from Architecture.Base import Base
from Compute.ComputeQueue import QueueDiscipline


class DisjointRan(Base):
    """
    Computing node in the RAN, but communication and computing are managed against separate budgets.
    """
    PARAMETERS = {
        "wireline": 0.005,
        "policy": ManagementPolicy.Disjoint,
        "queueDiscipline": QueueDiscipline.Fcfs,
        "dropJobs": False,
        "packetPriority": False,
    }
