import warnings

import numpy as np
from mamba import description, context, it, before
from expects import expect, equal, be_true, be_within, be_below_or_equal, be_above_or_equal, raise_error, have_length

from Analytic.Parameters import SystemRates, BudgetSplit
from Analytic.Satisfaction import jointSatisfaction, disjointSatisfaction
from Tools.Exceptions import UnstableSystemError, DegenerateBudgetWarning
from Tests.spec_helper import disjointOracle

with description('Satisfaction') as self:
    with before.each:
        self.ran = BudgetSplit(total=0.080, comm=0.024, comp=0.056, wireline=0.005)
        self.mec = BudgetSplit(total=0.080, comm=0.024, comp=0.056, wireline=0.020)

    with context('jointSatisfaction'):
        with it('is the hypoexponential CDF at the remaining budget'):
            expect(jointSatisfaction(SystemRates(0.0, 900.0, 100.0), self.ran)).to(be_within(0.999377, 0.999379))
            expect(jointSatisfaction(SystemRates(60.0, 900.0, 100.0), self.ran)).to(be_within(0.947723, 0.947725))

        with it('raises for unstable systems'):
            expect(lambda: jointSatisfaction(SystemRates(100.0, 900.0, 100.0), self.ran)).to(raise_error(UnstableSystemError))

        with it('returns 0 with a warning when the wireline eats the budget'):
            budget = BudgetSplit(total=0.010, wireline=0.010)
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always")
                expect(jointSatisfaction(SystemRates(10.0, 900.0, 100.0), budget)).to(equal(0.0))
            expect([w for w in caught if issubclass(w.category, DegenerateBudgetWarning)]).to(have_length(1))

        with it('is non-increasing in the arrival rate and non-decreasing in the budget'):
            rng = np.random.default_rng(3)
            for _ in range(100):
                mu1, mu2 = rng.uniform(50.0, 1000.0, size=2)
                lam = rng.uniform(0.0, 0.95 * min(mu1, mu2))
                total = rng.uniform(0.01, 0.2)
                rates = SystemRates(lam, mu1, mu2)
                budget = BudgetSplit(total=total, wireline=0.005)
                base = jointSatisfaction(rates, budget)
                busier = jointSatisfaction(rates.withLambda(lam + 0.5 * (min(mu1, mu2) - lam)), budget)
                looser = jointSatisfaction(rates, BudgetSplit(total=total * 1.5, wireline=0.005))
                expect(busier).to(be_below_or_equal(base))
                expect(looser).to(be_above_or_equal(base))

    with context('disjointSatisfaction'):
        with it('is the product of the two marginals when the split fits the total'):
            expect(disjointSatisfaction(SystemRates(0.0, 900.0, 100.0), self.ran)).to(be_within(0.996301, 0.996303))
            expect(disjointSatisfaction(SystemRates(30.0, 900.0, 100.0), self.mec)).to(be_within(0.9495, 0.9505))

        with it('never exceeds the joint satisfaction'):
            for lam in (0.0, 20.0, 40.0, 60.0, 80.0):
                rates = SystemRates(lam, 900.0, 100.0)
                expect(disjointSatisfaction(rates, self.ran)).to(be_below_or_equal(jointSatisfaction(rates, self.ran)))

        with it('integrates the region when the split exceeds the total'):
            budget = BudgetSplit(total=0.060, comm=0.030, comp=0.050, wireline=0.005)
            rates = SystemRates(40.0, 900.0, 100.0)
            expected = disjointOracle(860.0, 60.0, 0.025, 0.050, 0.055)
            expect(abs(disjointSatisfaction(rates, budget) - expected)).to(be_below_or_equal(1e-9))

        with it('agrees with the 2-D integral on random triples'):
            rng = np.random.default_rng(5)
            for _ in range(1000):
                mu1, mu2 = rng.uniform(50.0, 1000.0, size=2)
                lam = rng.uniform(0.0, 0.9 * min(mu1, mu2))
                comm, comp, total = rng.uniform(0.01, 0.1, size=3)
                budget = BudgetSplit(total=total + 0.005, comm=comm + 0.005, comp=comp, wireline=0.005)
                expected = disjointOracle(mu1 - lam, mu2 - lam, comm, comp, total)
                value = disjointSatisfaction(SystemRates(lam, mu1, mu2), budget)
                expect(abs(value - expected)).to(be_below_or_equal(1e-9))

        with it('is non-increasing in the arrival rate and non-decreasing in the total budget'):
            rng = np.random.default_rng(11)
            for _ in range(200):
                mu1, mu2 = rng.uniform(50.0, 1000.0, size=2)
                lam = rng.uniform(0.0, 0.95 * min(mu1, mu2))
                comm, comp, total = rng.uniform(0.01, 0.1, size=3)
                rates = SystemRates(lam, mu1, mu2)
                budget = BudgetSplit(total=total + 0.005, comm=comm + 0.005, comp=comp, wireline=0.005)
                base = disjointSatisfaction(rates, budget)
                busier = disjointSatisfaction(rates.withLambda(lam + 0.5 * (min(mu1, mu2) - lam)), budget)
                looser = disjointSatisfaction(
                    rates, BudgetSplit(total=1.5 * total + 0.005, comm=comm + 0.005, comp=comp, wireline=0.005)
                )
                # the region integral carries quadrature noise
                expect(busier).to(be_below_or_equal(base + 1e-9))
                expect(looser).to(be_above_or_equal(base - 1e-9))

        with it('needs both budgets'):
            budget = BudgetSplit(total=0.080, comm=None, comp=None)
            expect(lambda: disjointSatisfaction(SystemRates(10.0, 900.0, 100.0), budget)).to(raise_error(ValueError))

        with it('returns 0 with a warning when the comm budget is below the wireline'):
            budget = BudgetSplit(total=0.080, comm=0.004, comp=0.056, wireline=0.005)
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always")
                expect(disjointSatisfaction(SystemRates(10.0, 900.0, 100.0), budget)).to(equal(0.0))
            expect(any(issubclass(w.category, DegenerateBudgetWarning) for w in caught)).to(be_true)
