"""Closed-form tail bounds and Monte Carlo validators.

The binomial CDF is accumulated in the log domain (lgamma-based terms with a
running logaddexp), because tails at small n*p underflow naive products. An
exact rational CDF over ``Fraction`` probabilities is also provided as the
independent oracle for soundness checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .rng import generator

__all__ = [
    "chernoff_lower",
    "chernoff_upper",
    "binomial_tail_upper",
    "binomial_cdf",
    "binomial_cdf_exact",
    "binomial_tail_exact",
    "HistoryProcess",
    "independent_process",
    "boost_after_failure_process",
    "certain_process",
    "DominanceReport",
    "dominance_mc",
]


def chernoff_lower(mu: float, delta: float) -> float:
    """Upper bound on P[S <= (1-delta) * mu] for i.i.d. 0/1 sums with mean mu."""
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    if mu <= 0:
        raise ValueError("mu must be positive")
    return math.exp(-delta * delta * mu / 2.0)


def chernoff_upper(mu: float, delta: float) -> float:
    """Upper bound on P[S >= (1+delta) * mu]."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    if mu <= 0:
        raise ValueError("mu must be positive")
    return math.exp(-delta * delta * mu / (2.0 + delta))


def binomial_tail_upper(n: int, p: float, t: int) -> float:
    """Union bound (e*n*p/t)^t on P[B(n,p) >= t]; equal to 1 at t = 0."""
    if not 0 <= t <= n:
        raise ValueError("need 0 <= t <= n")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    if t == 0:
        return 1.0
    return (math.e * n * p / t) ** t


def _log_binom_pmf(n: int, logp: float, log1mp: float, j: int) -> float:
    return (
        math.lgamma(n + 1)
        - math.lgamma(j + 1)
        - math.lgamma(n - j + 1)
        + j * logp
        + (n - j) * log1mp
    )


def binomial_cdf(n: int, p: float, t: float) -> float:
    """P[B(n, p) <= t], accumulated in the log domain."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise ValueError("bad binomial parameters")
    if t < 0:
        return 0.0
    tt = min(int(math.floor(t)), n)
    if p == 0.0:
        return 1.0
    if p == 1.0:
        return 1.0 if tt >= n else 0.0
    logp = math.log(p)
    log1mp = math.log1p(-p)
    acc = -math.inf
    for j in range(tt + 1):
        acc = np.logaddexp(acc, _log_binom_pmf(n, logp, log1mp, j))
    return float(min(1.0, math.exp(acc)))


def binomial_cdf_exact(n: int, p: Fraction, t: int) -> Fraction:
    """Exact rational P[B(n, p) <= t] via an iterated pmf sweep."""
    if n < 0 or not 0 <= p <= 1:
        raise ValueError("bad binomial parameters")
    if t < 0:
        return Fraction(0)
    t = min(t, n)
    q = 1 - p
    if q == 0:
        return Fraction(1) if t >= n else Fraction(0)
    pmf = q**n
    total = pmf
    for j in range(1, t + 1):
        pmf = pmf * (n - j + 1) * p / (j * q)
        total += pmf
    return total


def binomial_tail_exact(n: int, p: Fraction, t: int) -> Fraction:
    """Exact rational P[B(n, p) >= t]."""
    if t <= 0:
        return Fraction(1)
    return 1 - binomial_cdf_exact(n, p, t - 1)


# -- stochastic dominance validation (coupling simulation) -------------------


@dataclass(frozen=True)
class HistoryProcess:
    """History-dependent Bernoulli sequence with conditional success floor p.

    ``step_prob(prev, total, i)`` maps vectors of the previous outcome and the
    running success count to the conditional success probability of step i,
    which must be >= ``floor_p`` for every reachable history.
    """

    name: str
    floor_p: float
    step_prob: Callable[[np.ndarray, np.ndarray, int], np.ndarray]


def independent_process(p: float) -> HistoryProcess:
    return HistoryProcess("independent", p, lambda prev, total, i: np.full(prev.shape, p))


def boost_after_failure_process(p: float) -> HistoryProcess:
    """Probability p right after a success, min(2p, 1) otherwise."""
    hi = min(2 * p, 1.0)
    return HistoryProcess(
        "boost-after-failure", p, lambda prev, total, i: np.where(prev, p, hi)
    )


def certain_process(p: float) -> HistoryProcess:
    return HistoryProcess("certain", p, lambda prev, total, i: np.ones(prev.shape))


@dataclass(frozen=True)
class DominanceReport:
    process: str
    n: int
    trials: int
    empirical_cdf: np.ndarray
    binomial_cdf: np.ndarray
    passed: bool
    worst_excess: float

    def to_json_obj(self) -> dict:
        return {
            "process": self.process,
            "n": self.n,
            "trials": self.trials,
            "empirical_cdf": [float(x) for x in self.empirical_cdf],
            "binomial_cdf": [float(x) for x in self.binomial_cdf],
            "pass": self.passed,
            "worst_excess": self.worst_excess,
        }


def dominance_mc(
    process: HistoryProcess, n: int, trials: int, seed: int, t: int | None = None
) -> DominanceReport:
    """Simulate the process and test P[sum X <= t] <= P[B(n, p) <= t].

    The simulation realises the coupling directly: one shared uniform draw per
    step both thresholds the conditional probability (giving the process) and
    thresholds the floor p (giving the binomial minorant), so the dominated
    sum is visible trial by trial. The check allows three Monte Carlo standard
    errors above the exact CDF, either at the given t or at every t.
    """
    if n < 1 or trials < 1:
        raise ValueError("n and trials must be positive")
    p = process.floor_p
    if not 0.0 < p <= 1.0:
        raise ValueError("floor probability must lie in (0, 1]")
    rng = generator(seed)
    u = rng.random((trials, n))
    prev = np.zeros(trials, dtype=bool)
    total = np.zeros(trials, dtype=np.int64)
    for i in range(n):
        probs = process.step_prob(prev, total, i)
        if np.any(probs < p - 1e-12):
            raise ValueError("process violates its conditional floor")
        hit = u[:, i] <= probs
        prev = hit
        total += hit
    counts = np.bincount(total, minlength=n + 1)
    empirical = np.cumsum(counts) / trials
    exact = np.array([binomial_cdf(n, p, s) for s in range(n + 1)])
    se = np.sqrt(exact * (1.0 - exact) / trials)
    ts = range(n + 1) if t is None else [t]
    worst = -math.inf
    ok = True
    for s in ts:
        excess = float(empirical[s] - (exact[s] + 3.0 * se[s]))
        worst = max(worst, excess)
        if excess > 0:
            ok = False
    return DominanceReport(process.name, n, trials, empirical, exact, ok, worst)
