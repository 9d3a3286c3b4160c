import math
import warnings

from scipy import integrate

from Analytic.Distributions import hypoexpSumCdf
from Tools.Exceptions import UnstableSystemError, DegenerateBudgetWarning

# Tolerances of the 2-D integration used when the disjoint budgets overlap the end-to-end budget
INTEGRATION_EPSABS = 1e-10
INTEGRATION_EPSREL = 1e-10


def requireStable(rates):
    if not rates.isStable:
        raise UnstableSystemError(
            f"Arrival rate {rates.lam} reaches the slowest service rate {rates.minRate} (mu1={rates.mu1}, mu2={rates.mu2})"
        )


def jointSatisfaction(rates, budget):
    """
    Probability that the air and computing sojourns together fit in b_total - t_wireline.

    Args:
        rates (SystemRates): stable tandem rates.
        budget (BudgetSplit): only total and wireline are used.

    Returns:
        float: probability in [0, 1].
    """
    requireStable(rates)
    remaining = budget.remaining
    if remaining <= 0:
        warnings.warn(
            f"Wireline delay {budget.wireline} leaves no end-to-end budget (total={budget.total})",
            DegenerateBudgetWarning,
            stacklevel=2,
        )
        return 0.0
    return hypoexpSumCdf(rates.mu1 - rates.lam, rates.mu2 - rates.lam, remaining)


def disjointSatisfaction(rates, budget):
    """
    Probability that the air sojourn fits b_comm - t_wireline, the computing sojourn fits b_comp and their sum fits
    b_total - t_wireline.

    When b_comm + b_comp <= b_total the end-to-end constraint is implied and the product of the two marginal CDFs is
    returned. Otherwise the product density is integrated over the constraint region.
    """
    requireStable(rates)
    if not budget.isSplit:
        raise ValueError("Disjoint management needs both the comm and the comp budgets")

    a = rates.mu1 - rates.lam
    b = rates.mu2 - rates.lam
    commLimit = budget.comm - budget.wireline
    compLimit = budget.comp
    remaining = budget.remaining

    if commLimit <= 0 or compLimit <= 0 or remaining <= 0:
        warnings.warn(
            f"Budget split leaves no room for the job (comm={budget.comm}, comp={budget.comp}, wireline={budget.wireline})",
            DegenerateBudgetWarning,
            stacklevel=2,
        )
        return 0.0

    if commLimit + compLimit <= remaining:
        return (-math.expm1(-a * commLimit)) * (-math.expm1(-b * compLimit))

    return _integrateRegion(a, b, commLimit, compLimit, remaining)


def _integrateRegion(a, b, commLimit, compLimit, remaining):
    density = lambda t2, t1: a * math.exp(-a * t1) * b * math.exp(-b * t2)
    upper = min(commLimit, remaining)
    # The inner limit min(compLimit, remaining - t1) has a kink at t1 = remaining - compLimit
    kink = remaining - compLimit
    pieces = []
    if kink > 0:
        pieces.append((0.0, min(kink, upper), lambda t1: compLimit))
        if kink < upper:
            pieces.append((kink, upper, lambda t1: remaining - t1))
    else:
        pieces.append((0.0, upper, lambda t1: remaining - t1))

    total = 0.0
    for lower, top, inner in pieces:
        value, _ = integrate.dblquad(
            density, lower, top, lambda t1: 0.0, inner, epsabs=INTEGRATION_EPSABS, epsrel=INTEGRATION_EPSREL
        )
        total += value
    return min(1.0, max(0.0, total))
