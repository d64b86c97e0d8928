"""Dominant-singularity asymptotics for the counting sequences.

For a rational counting series num/den with a simple dominant pole at the
smallest positive zero rho of den, the counts grow like C / rho^(n+1) with
C = -num(rho) / den'(rho). Root finding is a fixed-step sign scan followed by
bisection; degrees here are at most five, so nothing fancier is warranted.

Estimates are anchored to the recurrence claims (which the verification
pipeline checks against exhaustive enumeration) rather than to the stated
closed forms, so they stay accurate even where a stated generating function
is refuted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .catalog import FamilyRecord
from .series import UnivarPoly, UnivarRational


@dataclass(frozen=True)
class AsymptoticsConfig:
    """All numeric tolerances used by this module."""

    scan_step: float = 1e-3
    bisect_tol: float = 1e-12
    simple_root_tol: float = 1e-9  # |den'(rho)| below this means a suspect multiple root
    ratio_tol: float = 1e-6  # consecutive-ratio convergence requirement
    noise_floor: float = 1e-9  # relative errors below this are float noise


DEFAULT_CONFIG = AsymptoticsConfig()


@dataclass(frozen=True)
class AsymptoticEstimate:
    """Computed (rho, C) for one rational counting series."""

    rho: float
    constant: float
    source: UnivarRational

    def value(self, n: int) -> float:
        """C / rho^(n+1), via logarithms so large n cannot overflow."""
        if n < 0:
            raise ValueError("index must be >= 0")
        log_v = math.log(self.constant) - (n + 1) * math.log(self.rho)
        if log_v > 700.0:  # beyond float range
            return math.inf
        return math.exp(log_v)


def smallest_positive_root(p: UnivarPoly, config: AsymptoticsConfig = DEFAULT_CONFIG) -> float:
    """Smallest x in (0, 1] with p(x) = 0, for p with p(0) = 1.

    Scans with a fixed step for the first sign change, then bisects.
    Raises ValueError when no sign change exists or the located root looks
    multiple (derivative vanishing there too).
    """
    if p[0] != 1:
        raise ValueError("polynomial must have constant term 1")
    step = config.scan_step
    prev_x, prev_v = 0.0, 1.0
    lo = hi = None
    k = 1
    while True:
        x = k * step
        if x > 1.0 + step / 2:
            break
        x = min(x, 1.0)
        v = p.eval_float(x)
        if v == 0.0:
            lo = hi = x
            break
        if prev_v * v < 0:
            lo, hi = prev_x, x
            break
        prev_x, prev_v = x, v
        k += 1
    if lo is None:
        raise ValueError("no sign change in (0, 1]; no dominant positive root found")
    while hi - lo > config.bisect_tol:
        mid = (lo + hi) / 2
        if p.eval_float(lo) * p.eval_float(mid) <= 0:
            hi = mid
        else:
            lo = mid
    root = (lo + hi) / 2
    if abs(p.derivative().eval_float(root)) < config.simple_root_tol:
        raise ValueError(f"derivative nearly vanishes at root {root}; suspected multiple root")
    return root


def leading_constant(r: UnivarRational, rho: float,
                     config: AsymptoticsConfig = DEFAULT_CONFIG) -> float:
    """Residue-derived constant C = -num(rho) / den'(rho) for a simple pole."""
    dprime = r.den.derivative().eval_float(rho)
    if abs(dprime) < config.simple_root_tol:
        raise ValueError("den'(rho) is too small; pole is not simple")
    return -r.num.eval_float(rho) / dprime


def analyze(r: UnivarRational, config: AsymptoticsConfig = DEFAULT_CONFIG) -> AsymptoticEstimate:
    """(rho, C) of a rational counting series."""
    rho = smallest_positive_root(r.den, config)
    return AsymptoticEstimate(rho, leading_constant(r, rho, config), r)


def family_estimate(record: FamilyRecord,
                    config: AsymptoticsConfig = DEFAULT_CONFIG) -> AsymptoticEstimate:
    """Truth-side (rho, C): computed from the recurrence-defined series."""
    return analyze(record.recurrence.rational(), config)


def stated_gf_estimate(record: FamilyRecord,
                       config: AsymptoticsConfig = DEFAULT_CONFIG) -> AsymptoticEstimate:
    """(rho, C) computed from the stated univariate generating function.

    This reproduces how the printed constants were obtained; it can differ
    from family_estimate where the stated closed form is refuted.
    """
    return analyze(record.univariate_gf, config)


def estimate_count(record: FamilyRecord, n: int,
                   config: AsymptoticsConfig = DEFAULT_CONFIG) -> float:
    """Fast approximate count of maximal independent sets for n blocks."""
    return family_estimate(record, config).value(n)


def ratio_converges(record: FamilyRecord, n_from: int = 30, n_to: int = 60,
                    config: AsymptoticsConfig = DEFAULT_CONFIG) -> bool:
    """Empirical simple-pole check: a(n+1)/a(n) stays within ratio_tol of 1/rho."""
    est = family_estimate(record, config)
    seq = _sequence(record, n_to + 1)
    target = 1.0 / est.rho
    return all(abs(seq[n + 1] / seq[n] - target) <= config.ratio_tol for n in range(n_from, n_to + 1))


def _sequence(record: FamilyRecord, n_max: int) -> list[int]:
    from .series import recurrence_sequence

    return recurrence_sequence(record.recurrence.lags, record.recurrence.initial, n_max)


def relative_errors(record: FamilyRecord, n_from: int = 15, n_to: int = 40,
                    config: AsymptoticsConfig = DEFAULT_CONFIG) -> list[float]:
    """|estimate/exact - 1| over a range of n, exact values from the recurrence."""
    est = family_estimate(record, config)
    seq = _sequence(record, n_to)
    return [abs(est.value(n) / seq[n] - 1.0) for n in range(n_from, n_to + 1)]
