from enum import Enum

from Tools.Exceptions import ConfigurationError, SimulationError


class UplinkMode(Enum):
    ExponentialJob = "ExponentialJob"
    PacketShared = "PacketShared"


class Base:
    """
    Uplink air interface shared by all the UEs of the cell. Subclasses implement one service mode:

        - ExponentialUplink: whole-job service times ~ Exp(rate), the air stage of the tandem queue.
        - PacketSharedUplink: prompts are packetized and share a fixed capacity with background traffic.

    When the last part of a job leaves the air interface `onJobServed(job, time)` is called.

    Attributes:
        context (Simulator): the simulation run.
        DEFAULT_PARAMETERS (dict): parameters shared by every uplink mode.
    """
    DEFAULT_PARAMETERS = {
        # Payload of one prompt token on the air interface (bytes)
        "bytesPerToken": 4,
        # Largest RLC packet (bits)
        "maxPacketBits": 12000,
        # Record (time, priority class, waiting job packets) at every service start
        "traceServiceStarts": False,
    }

    def __init__(self, context, onJobServed, **overrides):
        self.context = context
        unknown = set(overrides) - set(self.getMergedParameters())
        if unknown:
            raise ConfigurationError(f"Unknown {self.__class__.__name__} parameters: {sorted(unknown)}")
        self.context.structure.AddConfiguration(parent=self, **{**self.getMergedParameters(), **overrides})
        self.logger = self.context.logger
        self.onJobServed = onJobServed
        self.busy = False
        self.serviceLog = []
        self.logger.debug(f"{self.__class__.__name__} -> __init__")

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

    def submitJob(self, job):
        raise NotImplementedError()

    def submitBackground(self, packet):
        raise SimulationError(f"{self.__class__.__name__} does not carry background traffic")

    def serve(self):
        """
        Starts the next service if the channel is idle. Returns the scheduled PacketUplinkDone event or None.
        """
        raise NotImplementedError()

    def onPacketDone(self, event):
        raise NotImplementedError()

    def jobServed(self, job):
        job.airDoneTime = self.context.clock
        if self.logger.isEnabled(4):
            self.logger.trace(f"job {job.jobId} left the air interface")
        self.onJobServed(job, self.context.clock)
