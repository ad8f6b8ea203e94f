"""Q_k(x), the Euler-product main-term constant, zeta, and the checks built on them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .generate import (
    Interval,
    count_kfull_interval,
    count_kfull_upto,
    enumerate_squarefull_interval,
)
from .intcore import check_nat, prime_list

# B_2, B_4, ..., B_24
_BERNOULLI = [
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510),
    Fraction(43867, 798), Fraction(-174611, 330), Fraction(854513, 138),
    Fraction(-236364091, 2730),
]

DEFAULT_TRUNCATION = 10**6
# Open ranges of theta for which the short-interval asymptotics are stated.
THETA_RANGE = {2: (Fraction(19, 154), Fraction(1, 2)), 3: (Fraction(5, 42), Fraction(1, 3))}


def qk_count(x: int, k: int) -> int:
    """Number of k-full n <= x (n = 1 included)."""
    return count_kfull_upto(x, k)


def zeta_real(s: float) -> float:
    """Riemann zeta for real s >= 1.1 by Euler-Maclaurin summation.

    Uses 30 direct terms and 12 Bernoulli corrections; the remainder is far
    below 1e-12 on the whole admissible range.
    """
    if not s >= 1.1:
        raise ValueError(f"zeta_real needs s >= 1.1, got {s}")
    N = 30
    terms = [n ** -s for n in range(1, N)]
    terms.append(N ** (1 - s) / (s - 1))
    terms.append(0.5 * N**-s)
    rising = s  # s (s+1) ... (s+2j-2)
    fact = 2.0
    for j, B in enumerate(_BERNOULLI, start=1):
        terms.append(float(B) / fact * rising * N ** (-s - 2 * j + 1))
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        fact *= (2 * j + 1) * (2 * j + 2)
    return math.fsum(terms)


@dataclass(frozen=True)
class EulerConstantResult:
    k: int
    P: int
    value: float
    tail_bound: float

    @property
    def upper(self) -> float:
        return self.value * math.exp(self.tail_bound)

    @property
    def beyond_range(self) -> bool:
        # k > 12 is outside the supported range; still computed.
        return self.k > 12


def euler_product_constant(k: int, P: int = DEFAULT_TRUNCATION) -> EulerConstantResult:
    """Truncated product over p <= P of (1 + sum_{m=k+1}^{2k-1} p^(-m/k)).

    Every omitted term is at most p^(-(k+1)/k), so the log of the missing
    factor is bounded by (k-1) * integral_P^inf t^(-(k+1)/k) dt
    = (k-1) k P^(-1/k), and the full constant lies in
    [value, value * exp(tail_bound)].
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if P < 2:
        raise ValueError(f"truncation prime bound must be >= 2, got {P}")
    p = np.asarray(prime_list(P), dtype=np.float64)
    inner = np.zeros_like(p)
    for m in range(k + 1, 2 * k):
        inner += p ** (-m / k)
    value = math.exp(math.fsum(np.log1p(inner).tolist()))
    tail = (k - 1) * k * P ** (-1.0 / k)
    return EulerConstantResult(k, P, value, tail)


@lru_cache(maxsize=None)
def _main_constant(k: int) -> float:
    return euler_product_constant(k).value


@dataclass(frozen=True)
class AsymptoticCheck:
    x: int
    k: int
    observed: int
    predicted_main: float
    ratio: float
    residual_normalized: float


def verify_main_term(x: int, k: int) -> AsymptoticCheck:
    """Compare Q_k(x) with constant * x^(1/k); residual scaled by x^(1/(k+1))."""
    if x < 10:
        raise ValueError(f"verify_main_term needs x >= 10, got {x}")
    observed = qk_count(x, k)
    predicted = _main_constant(k) * x ** (1.0 / k)
    return AsymptoticCheck(
        x=x,
        k=k,
        observed=observed,
        predicted_main=predicted,
        ratio=observed / predicted,
        residual_normalized=(observed - predicted) / x ** (1.0 / (k + 1)),
    )


@dataclass(frozen=True)
class ShortIntervalReport:
    x: int
    y: int
    k: int
    theta: float
    count: int
    predicted: float
    ratio: float


def short_interval_constant(k: int) -> float:
    """Leading coefficient of x^theta in the short-interval asymptotic."""
    if k == 2:
        return zeta_real(1.5) / (2 * zeta_real(3.0))
    if k == 3:
        return zeta_real(4 / 3) / (3 * zeta_real(4.0))
    raise ValueError(f"short-interval asymptotic is only available for k in {{2, 3}}, got {k}")


def short_interval_report(x: int, theta: float, k: int) -> ShortIntervalReport:
    if k not in THETA_RANGE:
        raise ValueError(f"k must be 2 or 3, got {k}")
    lo, hi = THETA_RANGE[k]
    if not float(lo) < theta < float(hi):
        raise ValueError(
            f"theta={theta} outside the admissible interval ({lo}, {hi}) = "
            f"({float(lo):.5f}, {float(hi):.5f}) for k={k}"
        )
    check_nat(x, "x")
    y = int(x ** (1 - 1 / k + theta))
    count = count_kfull_interval(Interval(x, y), k)
    predicted = short_interval_constant(k) * x**theta
    return ShortIntervalReport(x, y, k, theta, count, predicted, count / predicted)


def short_interval_ratio(x: int, theta: float, k: int) -> float:
    """Observed count in (x, x + x^(1-1/k+theta)] over the predicted main term."""
    return short_interval_report(x, theta, k).ratio


@dataclass(frozen=True)
class ReciprocalSum:
    X: int
    value: float
    normalized: float  # value * sqrt(X)


def reciprocal_sum_squarefull(X: int) -> ReciprocalSum:
    """Sum of 1/n over squarefull n in (X, X^2]."""
    if X < 2:
        raise ValueError(f"X must be >= 2, got {X}")
    check_nat(X * X, "X**2")
    terms = enumerate_squarefull_interval(Interval(X, X * X - X))
    value = math.fsum(1.0 / n for n in terms)
    return ReciprocalSum(X, value, value * math.sqrt(X))
