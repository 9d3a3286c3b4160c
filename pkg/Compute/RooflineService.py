from Compute.Base import Base
from Workload.Roofline import inferenceLatency


class RooflineService(Base):
    """
    Deterministic service time: the roofline inference latency of the job on the configured GPUs.
    """

    def __init__(self, context, model, gpu):
        super().__init__(context)
        self.model = model
        self.gpu = gpu

    def serviceTime(self, job):
        return inferenceLatency(job, self.model, self.gpu)

    def expectedServiceTime(self, job):
        return inferenceLatency(job, self.model, self.gpu)

    def residualTime(self, job, elapsed):
        return max(job.serviceTime - elapsed, 0.0)
