"""
Roofline latency of single-job LLM inference.

Every term is evaluated for one GPU and divided by the GPU count at the end, so that a node with k GPUs is exactly k
times faster than a node with one (the aggregate bandwidths scale linearly with the count).
"""

from Workload.GpuSpec import validate


def _prefillSingle(model, gpu, nInput):
    return max(nInput * model.cLlm / gpu.compBw, model.mLlm / gpu.memBw)


def _perTokenSingle(model, gpu):
    return max(model.cLlm / gpu.compBw, model.mLlm / gpu.memBw)


def isMemoryBound(model, gpu):
    """True when loading the weights dominates the per-token compute."""
    return model.mLlm / gpu.memBw >= model.cLlm / gpu.compBw


def prefillLatency(model, gpu, nInput):
    validate(gpu)
    if nInput < 1:
        raise ValueError(f"nInput must be >= 1, got {nInput}")
    return _prefillSingle(model, gpu, nInput) / gpu.count


def perTokenLatency(model, gpu):
    validate(gpu)
    return _perTokenSingle(model, gpu) / gpu.count


def tokengenLatency(model, gpu, nOutput):
    validate(gpu)
    if nOutput < 0:
        raise ValueError(f"nOutput must be >= 0, got {nOutput}")
    return nOutput * _perTokenSingle(model, gpu) / gpu.count


def inferenceLatency(job, model, gpu):
    """
    T_comp = T_prefill + T_tokengen for one job served alone on the node.
    """
    validate(gpu)
    if job.nInput < 1:
        raise ValueError(f"nInput must be >= 1, got {job.nInput}")
    if job.nOutput < 0:
        raise ValueError(f"nOutput must be >= 0, got {job.nOutput}")
    single = _prefillSingle(model, gpu, job.nInput) + job.nOutput * _perTokenSingle(model, gpu)
    return single / gpu.count
