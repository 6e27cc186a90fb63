"""Growth-rate fits of the census columns.

The staged counts grow like A * mu^N * N^(gamma-1); taking logarithms
makes the model linear in (log A, log mu, gamma-1), which is fitted by
ordinary least squares.  The fitted parameters extrapolate the census
beyond the reach of the exhaustive sweep.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

import numpy as np


@dataclass(frozen=True)
class FitParams:
    """Parameters of the power-law growth model A * mu^N * N^(gamma-1)."""

    A: float
    mu: float
    gamma_minus_1: float
    residual: float = 0.0

    def __post_init__(self) -> None:
        if not (self.A > 0 and self.mu > 0):
            raise ValueError("amplitude and growth base must be positive")
        if not all(map(math.isfinite, (self.A, self.mu, self.gamma_minus_1))):
            raise ValueError("fit parameters must be finite")


class DegenerateFit(ValueError):
    """The sample design matrix does not determine the three parameters."""


def fit(samples: list[tuple[int, float]]) -> FitParams:
    """Least-squares fit of log q = log A + N log mu + (gamma-1) log N.

    ``samples`` are (N, q) pairs with q > 0; at least three distinct N
    are required or the three-parameter design is rank deficient.
    """
    if any(q <= 0 for _, q in samples):
        raise ValueError("counts must be positive (drop zero entries)")
    ns = np.array([n for n, _ in samples], float)
    if len(set(ns.tolist())) < 3:
        raise DegenerateFit("need at least three distinct N values")
    qs = np.array([q for _, q in samples], float)
    design = np.column_stack([np.ones_like(ns), ns, np.log(ns)])
    target = np.log(qs)
    coef, *_ = np.linalg.lstsq(design, target, rcond=None)
    if np.linalg.matrix_rank(design) < 3:
        raise DegenerateFit("rank-deficient design matrix")
    log_a, log_mu, gm1 = map(float, coef)
    resid = float(np.sum((design @ coef - target) ** 2))
    return FitParams(math.exp(log_a), math.exp(log_mu), gm1, resid)


def estimate(p: FitParams, n: int) -> float:
    """Model value A * mu^n * n^(gamma-1), evaluated in log space."""
    if n < 1:
        raise ValueError("n must be at least 1")
    log_value = (math.log(p.A) + n * math.log(p.mu)
                 + p.gamma_minus_1 * math.log(n))
    try:
        return math.exp(log_value)
    except OverflowError:
        return math.inf


def round_half_away(x: float) -> int:
    return int(Decimal(repr(x)).quantize(Decimal("1"), rounding=ROUND_HALF_UP))


def estimate_rounded(p: FitParams, n: int) -> int:
    """Model value rounded half away from zero to the nearest integer."""
    return round_half_away(estimate(p, n))


def estimate_series(p: FitParams, n_lo: int, n_hi: int,
                    zero_below: int = 4) -> list[int]:
    """Rounded estimates over an inclusive range, reported as 0 below
    ``zero_below`` where no closed circuit exists and the model does not
    apply."""
    return [0 if n < zero_below else estimate_rounded(p, n)
            for n in range(n_lo, n_hi + 1)]


def cumulative_estimate(p: FitParams, exact_base: int,
                        n_range: range) -> int:
    """Exact count plus the summed rounded extrapolations over a range
    disjoint from the exactly-counted lengths."""
    return exact_base + sum(estimate_rounded(p, n) for n in n_range)
