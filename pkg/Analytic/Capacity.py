import math
import warnings

from scipy import optimize

from Analytic.Parameters import ManagementPolicy, SystemRates
from Analytic.Satisfaction import jointSatisfaction, disjointSatisfaction
from Tools.Exceptions import DegenerateBudgetWarning, UnstableGridPointWarning

# Relative tolerance of the capacity bisection
CAPACITY_RTOL = 1e-6


def satisfactionFor(policy):
    policy = ManagementPolicy.parse(policy)
    if policy is ManagementPolicy.Joint:
        return jointSatisfaction
    return disjointSatisfaction


def serviceCapacity(policy, mu1, mu2, budget, alpha=0.95, rtol=CAPACITY_RTOL):
    """
    Largest arrival rate that keeps the satisfaction probability at or above alpha.

    Satisfaction is non-increasing in the arrival rate, so the crossing is bracketed by [0, min(mu1, mu2)] and found by
    bisection. Satisfaction at lam = min(mu1, mu2) is taken as 0 (no steady state).

    Args:
        policy (ManagementPolicy): Joint or Disjoint.
        mu1 (float): air-interface service rate.
        mu2 (float): computing service rate.
        budget (BudgetSplit): latency budget.
        alpha (float): target probability, 0 < alpha < 1.

    Returns:
        float: the capacity in jobs/second, 0.0 when even an idle system misses alpha.
    """
    if alpha is None or not math.isfinite(alpha) or not 0 < alpha < 1:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")

    satisfaction = satisfactionFor(policy)
    rates = SystemRates(0.0, mu1, mu2)
    ceiling = rates.minRate

    if satisfaction(rates, budget) < alpha:
        return 0.0

    def excess(lam):
        if lam >= ceiling:
            return -alpha
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", DegenerateBudgetWarning)
            return satisfaction(rates.withLambda(lam), budget) - alpha

    return optimize.bisect(excess, 0.0, ceiling, rtol=rtol)


def satisfactionCurve(policy, mu1, mu2, budget, grid):
    """
    Satisfaction probability at every stable point of the grid. Unstable points are skipped with an
    UnstableGridPointWarning each.

    Returns:
        list: (lam, probability) pairs in grid order.
    """
    satisfaction = satisfactionFor(policy)
    rates = SystemRates(0.0, mu1, mu2)
    curve = []
    for lam in grid:
        lam = float(lam)
        if not math.isfinite(lam) or lam < 0:
            raise ValueError(f"Grid arrival rates must be finite and >= 0, got {lam}")
        if lam >= rates.minRate:
            warnings.warn(
                f"Skipping lam={lam}: outside the stable region (min service rate {rates.minRate})",
                UnstableGridPointWarning,
                stacklevel=2,
            )
            continue
        curve.append((lam, satisfaction(rates.withLambda(lam), budget)))
    return curve
