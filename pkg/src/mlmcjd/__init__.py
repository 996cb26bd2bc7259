"""Multilevel Monte Carlo pricing for scalar jump-diffusion SDEs.

Jump-adapted Milstein path simulation with coupled fine/coarse levels,
payoff estimators for vanilla, Asian, lookback, barrier and digital options,
and two treatments of state-dependent jump rates (thinning with a change of
measure, and cumulative-intensity inversion with likelihood reweighting).
"""

__version__ = "0.1.0"
