from .Packet import Packet, PriorityClass
from .Packetizer import packetize
from .Base import Base, UplinkMode
from .ExponentialUplink import ExponentialUplink
from .PacketSharedUplink import PacketSharedUplink, UplinkDiscipline
from .WirelineLink import WirelineLink
from .UeTraffic import UeTraffic, UeConfig
