from enum import Enum


class ServiceKind(Enum):
    ExponentialJob = "ExponentialJob"
    LlmRoofline = "LlmRoofline"


class Base:
    """
    Service time model of the computing node. Exactly one job is served at a time.

    Subclasses implement:
        serviceTime(job): the actual service time, drawn or computed when the service starts.
        expectedServiceTime(job): what the drop rule assumes the job will take.
        residualTime(job, elapsed): what the drop rule assumes is left of the job in service.
    """

    def __init__(self, context):
        self.context = context

    def serviceTime(self, job):
        raise NotImplementedError()

    def expectedServiceTime(self, job):
        raise NotImplementedError()

    def residualTime(self, job, elapsed):
        raise NotImplementedError()
