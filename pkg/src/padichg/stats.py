"""Sato-Tate statistics for the hypergeometric families.

Moment sums are exact integers; normalization divides by p^(m/2+1), whose
even-m limits are the Catalan numbers C_(m/2) (the semicircle moments).
Distribution reports histogram the normalized values value/sqrt(p) on
[-2, 2] and measure the exact Kolmogorov-Smirnov distance to the
semicircle CDF

    F(t) = 1/2 + t*sqrt(4-t^2)/(4*pi) + arcsin(t/2)/pi,

computed from the sorted samples, never from bins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .field import PrimeContext
from .hypergeo import family_sweep


@dataclass(frozen=True)
class MomentReport:
    p: int
    family: str
    m: int
    sum: int
    normalized: float
    expected: float


@dataclass(frozen=True)
class DistributionReport:
    p: int
    family: str
    # rows: (bin_left, bin_right, count, empirical_density, semicircle_density)
    rows: list[tuple[float, float, int, float, float]]
    ks_distance: float
    sample_size: int


def family_values(ctx: PrimeContext, family: str) -> np.ndarray:
    """Exact values over the family's lambda-domain.

    The G-families run over all of F_p (with structural zeros included);
    ap runs over lambda != 0, 1.
    """
    sweep = family_sweep(ctx, family)
    if family == "ap":
        return sweep[2:]
    return sweep


def catalan(n: int) -> int:
    """The n-th Catalan number (2n)! / (n! (n+1)!)."""
    return math.comb(2 * n, n) // (n + 1)


def moment_sum(ctx: PrimeContext, family: str, m: int) -> MomentReport:
    """Exact m-th moment sum of a family, with its semicircle target.

    normalized = sum / p^(m/2+1); expected is C_(m/2) for even m, 0 for
    odd m.  Accumulation is in unbounded integers: (2*sqrt(p))^m * p
    overflows 64 bits already around m = 8, p = 10^4.
    """
    if m < 1:
        raise ValueError("moment order m must be >= 1")
    vals = family_values(ctx, family)
    total = sum(int(v) ** m for v in vals.tolist())
    normalized = total / ctx.p ** (m / 2 + 1)
    expected = float(catalan(m // 2)) if m % 2 == 0 else 0.0
    return MomentReport(ctx.p, family, m, total, normalized, expected)


def semicircle_cdf(t: float) -> float:
    """CDF of the semicircle law on [-2, 2]."""
    if t <= -2.0:
        return 0.0
    if t >= 2.0:
        return 1.0
    return (
        0.5
        + t * math.sqrt(4.0 - t * t) / (4.0 * math.pi)
        + math.asin(t / 2.0) / math.pi
    )


def semicircle_density(t: float) -> float:
    """Density sqrt(4-t^2)/(2*pi) of the semicircle law at t."""
    if abs(t) >= 2.0:
        return 0.0
    return math.sqrt(4.0 - t * t) / (2.0 * math.pi)


def _semicircle_cdf_array(t: np.ndarray) -> np.ndarray:
    tc = np.clip(t, -2.0, 2.0)
    return (
        0.5
        + tc * np.sqrt(np.maximum(4.0 - tc * tc, 0.0)) / (4.0 * np.pi)
        + np.arcsin(tc / 2.0) / np.pi
    )


def ks_statistic(samples: np.ndarray) -> float:
    """Exact sup |empirical CDF - semicircle CDF| over the sample points.

    Uses the sorted-sample formula max_i max(F(x_i) - i/n,
    (i+1)/n - F(x_i)), which attains the supremum of the step-function
    difference.
    """
    x = np.sort(np.asarray(samples, dtype=np.float64))
    n = len(x)
    if n == 0:
        raise ValueError("empty sample")
    f = _semicircle_cdf_array(x)
    i = np.arange(n, dtype=np.float64)
    return float(max((f - i / n).max(), ((i + 1) / n - f).max()))


def distribution_report(
    ctx: PrimeContext, family: str, bins: int = 40
) -> DistributionReport:
    """Histogram of value/sqrt(p) on [-2, 2] plus the exact K-S distance."""
    if bins < 1:
        raise ValueError("bins must be >= 1")
    vals = family_values(ctx, family)
    samples = vals / math.sqrt(ctx.p)
    counts, edges = np.histogram(samples, bins=bins, range=(-2.0, 2.0))
    n = len(samples)
    rows = []
    for b in range(bins):
        left, right = float(edges[b]), float(edges[b + 1])
        count = int(counts[b])
        width = right - left
        rows.append(
            (
                left,
                right,
                count,
                count / (n * width),
                semicircle_density((left + right) / 2.0),
            )
        )
    return DistributionReport(
        ctx.p, family, rows, ks_statistic(samples), n
    )
