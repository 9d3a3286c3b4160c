from Tools.Exceptions import ConfigurationError

from .Base import Base
from .IccRan import IccRan
from .DisjointRan import DisjointRan
from .DisjointMec import DisjointMec

PRESETS = {
    "IccRan": IccRan,
    "DisjointRan": DisjointRan,
    "DisjointMec": DisjointMec,
}


def resolve(name, overrides=None):
    """
    Builds the preset `name` with the given override keys applied.
    """
    if name not in PRESETS:
        raise ConfigurationError(f"Unknown architecture '{name}'. Expected one of {list(PRESETS)}")
    return PRESETS[name](**(overrides or {}))
