"""Enumeration of k-full numbers over ranges and short intervals.

Two independent routes are provided for squarefull numbers:

* the parametrization n = a**2 * b**3 with b squarefree (unique per n), and
* a depth-first walk over prime-power blocks, which also handles every k
  and an optional cap on the largest prime factor.

Both produce ascending lists; counting variants avoid materializing values.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from math import isqrt
from typing import List, Optional

from .intcore import check_nat, ikroot, is_prime, primes_upto, squarefree_upto

# Largest prime we are willing to sieve for the DFS; past this the final
# prime-power block is tested candidate by candidate.
DFS_SIEVE_CAP = 20_000_000


@dataclass(frozen=True)
class Interval:
    """The half-open range (x, x + y]."""

    x: int
    y: int

    def __post_init__(self):
        if self.x < 0:
            raise ValueError(f"interval needs x >= 0, got {self.x}")
        if self.y < 1:
            raise ValueError(f"interval needs y >= 1, got {self.y}")
        check_nat(self.x + self.y, "x + y")

    @property
    def hi(self) -> int:
        return self.x + self.y

    def __contains__(self, n: int) -> bool:
        return self.x < n <= self.x + self.y


# ---------------------------------------------------------------------------
# a^2 b^3 parametrization (squarefull only)
# ---------------------------------------------------------------------------

def _squarefull_param(lo: int, hi: int, out: Optional[list]) -> int:
    total = 0
    sf = squarefree_upto(ikroot(hi, 3))
    for b in sf:
        b3 = b * b * b
        if b3 > hi:
            break
        a_lo = isqrt(lo // b3)
        a_hi = isqrt(hi // b3)
        if a_hi > a_lo:
            total += a_hi - a_lo
            if out is not None:
                out.extend(a * a * b3 for a in range(a_lo + 1, a_hi + 1))
    return total


def enumerate_squarefull_interval(iv: Interval) -> List[int]:
    """Squarefull n in (x, x+y], ascending, via n = a^2 b^3 with b squarefree."""
    out: list = []
    _squarefull_param(iv.x, iv.hi, out)
    out.sort()
    return out


def count_squarefull_interval(iv: Interval) -> int:
    return _squarefull_param(iv.x, iv.hi, None)


# ---------------------------------------------------------------------------
# Prime-block DFS (all k)
# ---------------------------------------------------------------------------

def _kfull_dfs(lo: int, hi: int, k: int, pmax: Optional[int], out: Optional[list]) -> int:
    """Count (and optionally collect) k-full n in (lo, hi] with p+(n) <= pmax.

    A node is a partial product P over primes below primes[i]; its
    completions m must satisfy lo < P*m <= hi. The last prime-power block
    q**e of m is located by an integer-root range rather than by descent, so
    only nodes that can still take at least one more block are visited, and
    a node is dropped as soon as (lo/P, hi/P] holds no integer.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    limit = ikroot(hi, k)
    if pmax is not None:
        limit = min(limit, pmax)
    sieve_to = min(limit, DFS_SIEVE_CAP)
    inner = ikroot(hi, 2 * k)
    if inner > sieve_to and limit > DFS_SIEVE_CAP:
        raise ValueError(f"hi={hi} too large for DFS enumeration with k={k}")
    primes = primes_upto(sieve_to)
    n_primes = bisect_right(primes, sieve_to)
    collect = out is not None
    total = 0
    if lo < 1 <= hi:
        total += 1
        if collect:
            out.append(1)

    def walk(P: int, i: int) -> None:
        nonlocal total
        h = hi // P
        l = lo // P
        qmin = primes[i] if i < n_primes else (primes[n_primes - 1] + 1 if n_primes else 2)
        # m is a single block q**e
        e = k
        while True:
            q_hi = ikroot(h, e)
            if q_hi < qmin:
                break
            q_lo = max(ikroot(l, e) + 1, qmin)
            q_hi = min(q_hi, limit)
            if q_lo <= q_hi:
                j0 = bisect_left(primes, q_lo, i, n_primes)
                j1 = bisect_right(primes, q_hi, j0, n_primes)
                total += j1 - j0
                if collect:
                    out.extend(P * q**e for q in primes[j0:j1])
                for q in range(max(q_lo, sieve_to + 1), q_hi + 1):
                    if is_prime(q):
                        total += 1
                        if collect:
                            out.append(P * q**e)
            e += 1
        # m = q**e * (at least one more block on a larger prime)
        for j in range(i, n_primes):
            q = primes[j]
            qk = q**k
            if qk * qk >= h:
                break
            qe = qk
            while qe * qk < h:
                Q = P * qe
                if hi // Q > lo // Q:
                    walk(Q, j + 1)
                qe *= q

    walk(1, 0)
    return total


def enumerate_kfull_upto(N: int, k: int) -> List[int]:
    """All k-full numbers in [1, N], ascending.

    >>> enumerate_kfull_upto(50, 2)
    [1, 4, 8, 9, 16, 25, 27, 32, 36, 49]
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    check_nat(N, "N")
    out: list = []
    _kfull_dfs(0, N, k, None, out)
    out.sort()
    return out


def enumerate_kfull_interval(iv: Interval, k: int) -> List[int]:
    out: list = []
    _kfull_dfs(iv.x, iv.hi, k, None, out)
    out.sort()
    return out


def enumerate_smooth_kfull_interval(iv: Interval, k: int, B: int) -> List[int]:
    """k-full n in the interval whose largest prime factor is <= B."""
    if B < 1:
        raise ValueError(f"smoothness bound must be >= 1, got {B}")
    out: list = []
    _kfull_dfs(iv.x, iv.hi, k, B, out)
    out.sort()
    return out


def count_kfull_upto(N: int, k: int) -> int:
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    check_nat(N, "N")
    return _kfull_dfs(0, N, k, None, None)


def count_kfull_interval(iv: Interval, k: int) -> int:
    """Exact count over (x, x+y]; squarefull windows use the a^2 b^3 route."""
    if k == 2:
        return count_squarefull_interval(iv)
    return _kfull_dfs(iv.x, iv.hi, k, None, None)


def count_smooth_kfull_interval(iv: Interval, k: int, B: int) -> int:
    if B < 1:
        raise ValueError(f"smoothness bound must be >= 1, got {B}")
    return _kfull_dfs(iv.x, iv.hi, k, B, None)
