from .HandleSimEvents import HandleSimEvents
from .SetupBaseStructure import SetupBaseStructure
