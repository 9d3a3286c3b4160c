import math

from Analytic.Parameters import requireFinite

# Relative rate gap below which the sum of two exponentials is treated as Erlang-2
ERLANG_SWITCH = 1e-9


def expSojournCdf(rate, t):
    """
    CDF of the M/M/1 sojourn time, Exp(rate) with rate = mu - lam.
    """
    requireFinite(rate=rate, t=t)
    if rate <= 0:
        raise ValueError(f"rate must be > 0, got {rate}")
    if t <= 0:
        return 0.0
    return -math.expm1(-rate * t)


def hypoexpSumCdf(a, b, t):
    """
    CDF of T1 + T2 with T1 ~ Exp(a) and T2 ~ Exp(b) independent.

    The a != b closed form 1 - (b e^{-at} - a e^{-bt}) / (b - a) is evaluated as
    1 - e^{-lo t} (1 + lo (1 - e^{-(hi - lo) t}) / (hi - lo)) with lo <= hi, which has no cancellation when the
    rates get close. Below ERLANG_SWITCH the Erlang-2 limit 1 - e^{-lo t} (1 + lo t) is returned.
    """
    requireFinite(a=a, b=b, t=t)
    if a <= 0 or b <= 0:
        raise ValueError(f"rates must be > 0, got a={a}, b={b}")
    if t <= 0:
        return 0.0

    lo, hi = (a, b) if a <= b else (b, a)
    gap = hi - lo
    if gap / hi < ERLANG_SWITCH:
        survival = math.exp(-lo * t) * (1.0 + lo * t)
    else:
        survival = math.exp(-lo * t) * (1.0 + lo * (-math.expm1(-gap * t)) / gap)
    return min(1.0, max(0.0, 1.0 - survival))
