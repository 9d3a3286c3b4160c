from dataclasses import dataclass
from typing import Optional

from Tools.DataRecord import DataRecord


@dataclass
class LlmModel(DataRecord):
    """
    Workload complexity of one LLM.

    Attributes:
        name (str): catalog key.
        paramCount (int): number of parameters.
        bytesPerParam (float): bytes per parameter (2 for FP16).
        cLlm (float): FLOPs per token, defaults to twice the parameter count.
        mLlm (float): model size in bytes, defaults to paramCount * bytesPerParam.
    """
    name: str = ""
    paramCount: int = 0
    bytesPerParam: float = 2.0
    cLlm: Optional[float] = None
    mLlm: Optional[float] = None

    def __post_init__(self):
        if self.paramCount <= 0:
            raise ValueError(f"paramCount must be > 0, got {self.paramCount}")
        if self.bytesPerParam <= 0:
            raise ValueError(f"bytesPerParam must be > 0, got {self.bytesPerParam}")
        if self.cLlm is None:
            self.cLlm = 2.0 * self.paramCount
        if self.mLlm is None:
            self.mLlm = self.paramCount * self.bytesPerParam
        if self.cLlm <= 0 or self.mLlm <= 0:
            raise ValueError(f"cLlm and mLlm must be > 0, got cLlm={self.cLlm}, mLlm={self.mLlm}")
