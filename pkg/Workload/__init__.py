from .LlmModel import LlmModel
from .GpuSpec import GpuSpec
from .Job import Job
from .Roofline import prefillLatency, tokengenLatency, inferenceLatency, perTokenLatency, isMemoryBound
from .HardwareCatalog import HardwareCatalog
