"""
Test-count formulas for the randomized construction.

required_k is the closed-form size k = ceil((2 ln m + alpha) * 2ed / beta).
tight_k is the smallest k with m^2 * (1 - s)^k < e^-alpha, where s is
the separation probability of one test sampled with the entry probability
actually used. For the default p this never exceeds required_k.
"""
import math
from fractions import Fraction
from typing import Optional


def _check(m: int, d: int, beta: int, alpha: float):
    if m < 2:
        raise ValueError(f"need at least two edges, got m={m}")
    if not 1 <= beta <= d:
        raise ValueError(f"need 1 <= beta <= d, got beta={beta}, d={d}")
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")


def entry_probability(d: int, p_override: Optional[float] = None) -> float:
    """1/d, except 1/2 for d = 1 where 1/d would put every vertex in every test."""
    if p_override is not None:
        return p_override
    return 0.5 if d == 1 else 1.0 / d


def required_k(m: int, d: int, beta: int, alpha: float) -> int:
    _check(m, d, beta, alpha)
    # d/beta as an exact ratio so equal ratios give bit-identical values.
    ratio = float(Fraction(d, beta))
    return math.ceil((2.0 * math.log(m) + alpha) * 2.0 * math.e * ratio)


def separation_probability(d: int, beta: int, p: float) -> float:
    """Lower bound (1-p)^d * (1-(1-p)^beta) on one random test separating a pair."""
    return (1.0 - p) ** d * (1.0 - (1.0 - p) ** beta)


def tight_k(m: int, d: int, beta: int, alpha: float, p: Optional[float] = None) -> int:
    """Smallest integer k > -(2 ln m + alpha) / ln(1 - s), s = separation_probability(d, beta, p)."""
    _check(m, d, beta, alpha)
    p = entry_probability(d, p)
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    s = separation_probability(d, beta, p)
    threshold = -(2.0 * math.log(m) + alpha) / math.log1p(-s)
    return math.floor(threshold) + 1


def traditional_reference(n: int, d: int) -> float:
    """d * log2(n/d), the order of the classical test count for all d-subsets."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    return d * math.log2(n / d)
