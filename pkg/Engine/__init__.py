from .Event import Event, EventKind
from .EventQueue import EventQueue
from .RngStreams import RngStreams, poissonInterarrival, STREAM_NAMES
from .Simulator import Simulator
