from .Parameters import SystemRates, BudgetSplit, ManagementPolicy
from .Distributions import expSojournCdf, hypoexpSumCdf
from .Satisfaction import jointSatisfaction, disjointSatisfaction
from .Capacity import serviceCapacity, satisfactionCurve, satisfactionFor
