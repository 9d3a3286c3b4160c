from Compute.Base import Base


class ExponentialService(Base):
    """
    Exp(rate) service times from the "service" stream. Being memoryless, the expected residual of the job in service is
    the full mean.
    """

    def __init__(self, context, rate):
        super().__init__(context)
        if rate is None or rate <= 0:
            raise ValueError(f"Service rate must be > 0, got {rate}")
        self.rate = rate

    def serviceTime(self, job):
        return self.context.rng.exponential("service", self.rate)

    def expectedServiceTime(self, job):
        return 1.0 / self.rate

    def residualTime(self, job, elapsed):
        return 1.0 / self.rate
