from .SatisfactionRule import SatisfactionRule, Outcome
from .ComputeQueue import ComputeQueue, QueueDiscipline
from .Base import Base, ServiceKind
from .ExponentialService import ExponentialService
from .RooflineService import RooflineService
from .ComputeNode import ComputeNode
