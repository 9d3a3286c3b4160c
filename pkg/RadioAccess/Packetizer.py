from RadioAccess.Packet import Packet, PriorityClass


def packetize(job, bytesPerToken, maxPacketBits, now=None):
    """
    Splits the prompt of `job` into RLC packets of at most `maxPacketBits`; only the last packet may be short.

    Args:
        job (Job): the owner job.
        bytesPerToken (float): payload bytes per prompt token.
        maxPacketBits (int): largest packet size.
        now (float): enqueue time, the job generation time by default.

    Returns:
        list: the packets, in transmission order.
    """
    if bytesPerToken <= 0:
        raise ValueError(f"bytesPerToken must be > 0, got {bytesPerToken}")
    if int(maxPacketBits) != maxPacketBits or maxPacketBits <= 0:
        raise ValueError(f"maxPacketBits must be an integer > 0, got {maxPacketBits}")

    payload = job.nInput * bytesPerToken * 8
    if payload <= 0:
        raise ValueError(f"Job {job.jobId} has no payload to transmit")

    enqueueTime = job.genTime if now is None else now
    fullPackets, remainder = divmod(payload, maxPacketBits)
    sizes = [maxPacketBits] * int(fullPackets)
    if remainder > 0:
        sizes.append(remainder)

    return [
        Packet(size=size, priorityClass=PriorityClass.JobHigh, enqueueTime=enqueueTime, ownerJob=job.jobId, job=job)
        for size in sizes
    ]
