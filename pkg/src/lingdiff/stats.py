"""Exact binomial inference for two-corpus count comparisons.

Each feature is treated as a single 2x1 table: ``k_human`` occurrences in one
corpus against ``k_ai`` in the other, tested against an equal split.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

LOG_SPACE_ABOVE = 50


class FeatureSkipped(ValueError):
    """Raised when a feature has no occurrences in either corpus."""


@dataclass(frozen=True)
class TestConfig:
    alpha: float = 0.05
    null_p: float = 0.5
    relative_tie_epsilon: float = 1e-7

    __test__ = False  # not a pytest class

    def __post_init__(self):
        if not 0 < self.alpha < 1:
            raise ValueError("alpha must lie in (0, 1)")
        if not 0 < self.null_p < 1:
            raise ValueError("null_p must lie in (0, 1)")


@dataclass(frozen=True)
class BinomialResult:
    feature: str
    k_human: int
    k_ai: int
    n: int
    p_value: float
    ci_low: float
    ci_high: float
    prob: float
    cohens_h: float
    effect_label: str
    significant: bool
    level: str = ""


def _check(n: int, k: int, p: float):
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")


def _log_pmf(n: int, k: int, p: float) -> float:
    if p == 0.0:
        return 0.0 if k == 0 else -math.inf
    if p == 1.0:
        return 0.0 if k == n else -math.inf
    return (math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)
            + k * math.log(p) + (n - k) * math.log1p(-p))


def binomial_pmf(n: int, k: int, p: float) -> float:
    """``C(n, k) p^k (1-p)^(n-k)``, evaluated in log space when ``n > 50``."""
    _check(n, k, p)
    if n <= LOG_SPACE_ABOVE:
        return math.comb(n, k) * p ** k * (1.0 - p) ** (n - k)
    return math.exp(_log_pmf(n, k, p))


def exact_binomial_test(k: int, n: int, cfg: TestConfig = TestConfig()) -> float:
    """Two-sided exact p-value: total mass of outcomes no more likely than ``k``."""
    if n < 1:
        raise ValueError("binomial test needs n >= 1")
    _check(n, k, cfg.null_p)
    p = cfg.null_p
    d = binomial_pmf(n, k, p) * (1.0 + cfg.relative_tie_epsilon)
    included = excluded = 0.0
    for i in range(n + 1):
        pi = binomial_pmf(n, i, p)
        if pi <= d:
            included += pi
        else:
            excluded += pi
    # small p-values are summed directly; large ones as the complement, so the
    # modal outcome gives exactly 1
    total = included if included < 0.5 else 1.0 - excluded
    return min(1.0, max(0.0, total))


def binomial_cdf(k: int, n: int, p: float) -> float:
    """``P(X <= k)`` for ``X ~ Bin(n, p)``.

    Sums whichever tail is shorter from its edge outward so the cost stays
    near ``O(sqrt(n))`` for large ``n``.
    """
    if k < 0:
        return 0.0
    if k >= n:
        return 1.0
    if p <= 0.0:
        return 1.0
    if p >= 1.0:
        return 0.0
    mode = (n + 1) * p
    if k < mode:
        return _tail_sum(n, p, k, -1)
    return 1.0 - _tail_sum(n, p, k + 1, +1)


def _tail_sum(n: int, p: float, start: int, step: int) -> float:
    # terms decrease monotonically moving away from the mode
    term = math.exp(_log_pmf(n, start, p))
    if term == 0.0:
        return 0.0
    total = 0.0
    i = start
    ratio_up = p / (1.0 - p)
    while 0 <= i <= n:
        total += term
        if term < total * 1e-17:
            break
        if step < 0:
            term *= i / (n - i + 1) / ratio_up
        else:
            term *= (n - i) / (i + 1) * ratio_up
        i += step
    return total


def _bisect(f, lo: float, hi: float) -> float:
    """Root of a monotone ``f`` on ``[lo, hi]``, bisected down to float resolution."""
    flo = f(lo)
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def clopper_pearson(k: int, n: int, alpha: float = 0.05) -> tuple[float, float]:
    """Exact (Clopper-Pearson) two-sided confidence interval for ``k / n``."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"need n >= 1 and 0 <= k <= n, got k={k}, n={n}")
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0, 1)")
    half = alpha / 2.0
    # P(X >= k | p) = 1 - cdf(k-1) increases with p
    low = 0.0 if k == 0 else _bisect(lambda p: (1.0 - binomial_cdf(k - 1, n, p)) - half, 0.0, 1.0)
    # P(X <= k | p) decreases with p
    high = 1.0 if k == n else _bisect(lambda p: binomial_cdf(k, n, p) - half, 0.0, 1.0)
    return low, high


def cohens_h(p1: float, p2: float) -> float:
    if not (0.0 <= p1 <= 1.0 and 0.0 <= p2 <= 1.0):
        raise ValueError("proportions must lie in [0, 1]")
    return 2.0 * math.asin(math.sqrt(p1)) - 2.0 * math.asin(math.sqrt(p2))


def effect_label(h: float) -> str:
    size = abs(h)
    if size < 0.2:
        return "negligible"
    if size < 0.5:
        return "small"
    if size < 0.8:
        return "moderate"
    return "large"


def compare_feature(feature: str, k_human: int, k_ai: int,
                    cfg: TestConfig = TestConfig(), level: str = "") -> BinomialResult:
    """Exact test of ``k_human`` out of ``k_human + k_ai`` against ``cfg.null_p``."""
    if k_human < 0 or k_ai < 0:
        raise ValueError("counts must be non-negative")
    n = k_human + k_ai
    if n == 0:
        raise FeatureSkipped(f"{feature}: no occurrences in either corpus")
    prob = k_human / n
    p_value = exact_binomial_test(k_human, n, cfg)
    low, high = clopper_pearson(k_human, n, cfg.alpha)
    h = cohens_h(prob, 1.0 - prob)
    return BinomialResult(
        feature=feature, k_human=k_human, k_ai=k_ai, n=n,
        p_value=p_value, ci_low=low, ci_high=high, prob=prob,
        cohens_h=h, effect_label=effect_label(h),
        significant=p_value < cfg.alpha, level=level,
    )
