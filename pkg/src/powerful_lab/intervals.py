"""Short-interval scanners and the prefix split of squarefull numbers."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Dict, Tuple

import numpy as np

from .generate import (
    Interval,
    count_kfull_interval,
    count_smooth_kfull_interval,
    enumerate_kfull_upto,
    enumerate_squarefull_interval,
)
from .intcore import INFINITE, factorize, ikroot, prime_list, totient

WINDOW_FIELDS = ("x", "y", "k", "count", "conj_ratio", "thm1_ratio")

# Harness constants for the empirical bound comparisons; measured, not claimed.
RESIDUE_BOUND_CONSTANT = 50.0
WINDOW_BOUND_CONSTANT = 6.0


@dataclass(frozen=True)
class WindowReport:
    x: int
    y: int
    k: int
    count: int
    conj_ratio: float
    thm1_ratio: float

    @classmethod
    def from_count(cls, x: int, y: int, k: int, count: int) -> "WindowReport":
        return cls(x, y, k, count, count / y ** (1.0 / k), count * math.log(y + 1) / y)

    def as_dict(self) -> dict:
        return asdict(self)


def window_count(x: int, y: int, k: int) -> WindowReport:
    return WindowReport.from_count(x, y, k, count_kfull_interval(Interval(x, y), k))


def sup_ratio_scan(x_max: int, y: int, k: int) -> Tuple[int, float]:
    """Window (x, x+y] with x <= x_max holding the most k-full numbers.

    Returns (best_x, count / y^(1/k)); ties go to the smallest x. Only
    windows whose contents start at a k-full n_i need checking: the
    window holds n_i..n_j for every x in [max(n_{i-1}, n_j - y), n_i - 1],
    so the left end of that range is the smallest start for that content.
    """
    if y < 1:
        raise ValueError(f"y must be >= 1, got {y}")
    if x_max < 0:
        raise ValueError(f"x_max must be >= 0, got {x_max}")
    values = enumerate_kfull_upto(x_max + y, k)
    best_count, best_x = 0, 0
    j = 0
    for i, n in enumerate(values):
        prev = values[i - 1] if i else 0
        if prev > x_max:
            break
        if j < i:
            j = i
        while j + 1 < len(values) and values[j + 1] <= n - 1 + y:
            j += 1
        start = max(prev, values[j] - y)
        if start > x_max:
            continue
        cnt = j - i + 1
        if cnt > best_count or (cnt == best_count and start < best_x):
            best_count, best_x = cnt, start
    return best_x, best_count / y ** (1.0 / k)


@dataclass(frozen=True)
class ResidueReport:
    x: int
    y: int
    q: int
    r: int
    count: int
    coprime: bool
    comparator: float  # y / (phi(q) log(y+1))

    @property
    def normalized(self) -> float:
        return self.count / self.comparator


def residue_count(x: int, y: int, q: int, r: int) -> ResidueReport:
    """Squarefull n in (x, x+y] with n = r (mod q).

    Non-coprime (r, q) is still counted; the report's ``coprime`` flag says
    whether the comparison against the progression bound is meaningful.
    """
    if q < 1:
        raise ValueError(f"modulus q must be >= 1, got {q}")
    r %= q
    count = sum(1 for n in enumerate_squarefull_interval(Interval(x, y)) if n % q == r)
    comparator = y / (totient(q) * math.log(y + 1))
    return ResidueReport(x, y, q, r, count, math.gcd(r, q) == 1, comparator)


@dataclass(frozen=True)
class RoughReport:
    x: int
    y: int
    q: int
    r: int
    z: int
    count: int
    comparator: float  # y / (phi(q) log z) + z^2


def rough_count(x: int, y: int, q: int, r: int, z: int) -> RoughReport:
    """Integers n in (x, x+y], n = r (mod q), with no prime factor <= z."""
    if z < 2:
        raise ValueError(f"z must be >= 2, got {z}")
    if q < 1:
        raise ValueError(f"modulus q must be >= 1, got {q}")
    if math.gcd(r, q) != 1:
        raise ValueError(f"need gcd(r, q) = 1, got r={r}, q={q}")
    iv = Interval(x, y)
    lo, hi = iv.x + 1, iv.hi
    keep = np.zeros(y, dtype=bool)
    # positions of n = r (mod q)
    keep[(r - lo) % q :: q] = True
    primes = np.asarray(prime_list(min(z, hi)), dtype=np.int64)
    small = primes[primes <= y]
    for p in small.tolist():
        start = (-lo) % p
        keep[start::p] = False
    big = primes[primes > y]
    if big.size:
        first = (x // big + 1) * big
        hit = first[first <= hi]
        keep[hit - lo] = False
    # a prime p <= z is its own smallest factor, so the multiple p*1 is already removed
    count = int(np.count_nonzero(keep))
    comparator = y / (totient(q) * math.log(z)) + z * z
    return RoughReport(x, y, q, r % q, z, count, comparator)


def smoothness_bound(y: int, exponent: float) -> int:
    """floor(y^exponent), exact for exponents that are ratios of small integers."""
    if not 0 < exponent <= 1:
        raise ValueError(f"smooth exponent must lie in (0, 1], got {exponent}")
    e = Fraction(exponent).limit_denominator(100)
    return ikroot(y**e.numerator, e.denominator)


@dataclass(frozen=True)
class SmoothReport:
    x: int
    y: int
    k: int
    exponent: float
    B: int
    count: int
    comparator: float  # y^(11/12)


def smooth_window_count(x: int, y: int, k: int, smooth_exponent: float = 0.5) -> SmoothReport:
    """k-full n in (x, x+y] whose largest prime factor is <= y^smooth_exponent."""
    B = smoothness_bound(y, smooth_exponent)
    count = count_smooth_kfull_interval(Interval(x, y), k, max(B, 1))
    return SmoothReport(x, y, k, smooth_exponent, B, count, y ** (11 / 12))


@dataclass(frozen=True)
class ShiuSplit:
    n: int
    z: float
    b_part: int
    d_part: int
    case_id: int


def shiu_split(n: int, z) -> ShiuSplit:
    """Split squarefull n = b * d, b the longest ascending-prime block prefix <= z.

    Case 1: b > sqrt(z). Case 2: b <= sqrt(z) and the least prime of d is
    <= sqrt(z). Case 3: otherwise, including d = 1.
    """
    if z < 1:
        raise ValueError(f"z must be >= 1, got {z}")
    blocks = factorize(n)
    if any(e < 2 for _, e in blocks):
        raise ValueError(f"shiu_split needs a squarefull n, got {n}")
    b = 1
    j = 0
    for p, e in blocks:
        if b * p**e > z:
            break
        b *= p**e
        j += 1
    d = n // b
    p_min = blocks[j][0] if j < len(blocks) else INFINITE
    if b * b > z:
        case = 1
    elif p_min * p_min <= z:
        case = 2
    else:
        case = 3
    return ShiuSplit(n, z, b, d, case)


def case_histogram(x: int, y: int, z) -> Dict[int, int]:
    if z < 2:
        raise ValueError(f"z must be >= 2, got {z}")
    hist = Counter({1: 0, 2: 0, 3: 0})
    for n in enumerate_squarefull_interval(Interval(x, y)):
        hist[shiu_split(n, z).case_id] += 1
    return dict(hist)


def coupled_parameters(y: int, alpha: float) -> Tuple[float, int]:
    """The coupled preset: z = y^(alpha/2) and the largest allowed modulus y^(1-alpha)."""
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    return y ** (alpha / 2), int(y ** (1 - alpha))
