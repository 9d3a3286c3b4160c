import Architecture
from Compute.Base import ServiceKind
from Compute.ComputeNode import ComputeNode
from Compute.ExponentialService import ExponentialService
from Compute.RooflineService import RooflineService
from Initialization.HandleSimEvents import HandleSimEvents
from RadioAccess.Base import UplinkMode
from RadioAccess.ExponentialUplink import ExponentialUplink
from RadioAccess.PacketSharedUplink import PacketSharedUplink, UplinkDiscipline
from RadioAccess.UeTraffic import UeTraffic, UeConfig
from RadioAccess.WirelineLink import WirelineLink
from Tools.Exceptions import ConfigurationError
from Tools.Performance import Performance
from Workload.HardwareCatalog import HardwareCatalog


class SetupBaseStructure:
    """
    Wires one simulation run: builds every component from the scenario configuration and the architecture preset,
    attaches them to the context (the Simulator) and registers the event handlers.

    How to use it:

        simulator = Simulator(seed=config.seed, replication=0, logLevel=config.logLevel)
        SetupBaseStructure(simulator).Setup(config)
        simulator.traffic.start()
        simulator.runUntil(config.horizon)

    After Setup the context exposes: config, architecture, horizon, warmup, performance, rule, serviceModel,
    computeNode, wireline, uplink, traffic and eventHandler.
    """
    DEFAULT_PARAMETERS = {
        # Record the uplink service starts (time, priority class, waiting job packets)
        "traceServiceStarts": False,
        # Record the computing node dispatch decisions (time, job, key, smallest waiting key)
        "traceDispatch": False,
    }

    def __init__(self, context):
        self.context = context
        self.context.structure = self

    def Setup(self, config, architecture=None, hardware=None, **options):
        """
        Args:
            config (ScenarioConfig): scenario parameters.
            architecture (Architecture.Base): preset to use instead of the one named by the config.
            hardware (HardwareCatalog): catalog to use instead of loading config.hardwareFile.
            options: overrides of DEFAULT_PARAMETERS.
        """
        context = self.context
        context.logger.debug(f"{self.__class__.__name__} -> Setup")
        unknown = set(options) - set(SetupBaseStructure.DEFAULT_PARAMETERS)
        if unknown:
            raise ConfigurationError(f"Unknown setup options: {sorted(unknown)}")
        self.AddConfiguration(**{**SetupBaseStructure.DEFAULT_PARAMETERS, **options})

        context.config = config
        context.architecture = architecture or Architecture.resolve(config.architecture, config.architectureOverrides)
        context.horizon = config.horizon
        context.warmup = config.warmup
        context.performance = Performance(context, warmup=context.warmup)
        context.rule = context.architecture.satisfactionRule(config.get("budget.total"))
        context.eventHandler = HandleSimEvents(context).Register()

        context.serviceModel = self.BuildServiceModel(config, hardware)
        context.computeNode = ComputeNode(
            context,
            context.serviceModel,
            onCompleted=context.eventHandler.jobCompleted,
            onDropped=context.eventHandler.jobDropped,
            queueDiscipline=context.architecture.queueDiscipline,
            dropJobs=context.architecture.dropJobs,
            reevaluateDrops=context.architecture.reevaluateDrops,
            traceDispatch=context.traceDispatch,
        )
        context.wireline = WirelineLink(context, context.architecture.wireline)
        context.uplink = self.BuildUplink(config)

        ueConfig = UeConfig(
            ueCount=config.get("ue.count"),
            perUeJobRate=config.get("ue.jobRate"),
            backgroundRate=config.get("ue.backgroundRate"),
            backgroundPacketBits=config.get("ue.backgroundPacketBits"),
        )
        context.traffic = UeTraffic(
            context,
            ueConfig,
            context.uplink,
            nInput=config.get("job.nInput"),
            nOutput=config.get("job.nOutput"),
            bTotal=config.get("budget.total"),
            horizon=context.horizon,
            background=isinstance(context.uplink, PacketSharedUplink),
        )
        context.traffic.onJobGenerated = context.performance.onGenerated
        return self

    def BuildServiceModel(self, config, hardware=None):
        if ServiceKind(config.get("compute.service")) is ServiceKind.ExponentialJob:
            return ExponentialService(self.context, config.get("rates.mu2"))

        hardware = hardware or HardwareCatalog.load(config.hardwarePath)
        model = hardware.model(config.get("compute.model"))
        gpu = hardware.gpu(config.get("compute.gpu"), count=config.get("compute.gpuCount"))
        self.context.logger.info(f"{self.__class__.__name__} -> BuildServiceModel -> {model.name} on {gpu.count} x {gpu.name}")
        return RooflineService(self.context, model, gpu)

    def BuildUplink(self, config):
        common = {
            "bytesPerToken": config.get("uplink.bytesPerToken"),
            "maxPacketBits": config.get("uplink.maxPacketBits"),
            "traceServiceStarts": self.context.traceServiceStarts,
        }
        onJobServed = self.context.wireline.deliverToCompute
        if UplinkMode(config.get("uplink.mode")) is UplinkMode.ExponentialJob:
            return ExponentialUplink(self.context, onJobServed, rate=config.get("rates.mu1"), **common)

        discipline = UplinkDiscipline.JobPriority if self.context.architecture.packetPriority else UplinkDiscipline.Fifo
        return PacketSharedUplink(
            self.context, onJobServed, capacity=config.get("uplink.capacity"), discipline=discipline, **common
        )

    def AddConfiguration(self, parent=None, **kwargs) -> None:
        """
        Adds configuration settings to the context or a specified object within the context. This method allows for
        dynamic assignment of configuration parameters.

        Args:
            parent: Parent object to which the attributes will be added.
            kwargs: Keyword arguments containing attribute names and their values.
        """
        parent = parent or self.context
        for attr_name, attr_value in kwargs.items():
            setattr(parent, attr_name, attr_value)
