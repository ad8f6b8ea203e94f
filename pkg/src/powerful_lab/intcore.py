"""Exact integer kernels: roots, primes, factorization, radical, fullness.

Everything here works on Python ints but enforces the 127-bit ``Nat``
ceiling so that downstream counts never silently run past the range the
rest of the library was designed for.
"""

from __future__ import annotations

import math
import os
import threading
from bisect import bisect_right
from typing import List, Tuple

import numpy as np

NAT_MAX = (1 << 127) - 1
INFINITE = math.inf

PrimeFactorization = List[Tuple[int, int]]

# SPF table covers n below this; larger n go through trial division + rho.
SPF_LIMIT = 1 << 21
DEFAULT_TRIAL_LIMIT = 10_000
# Miller-Rabin with the first 13 prime bases is deterministic below this.
_MR_DETERMINISTIC = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class NatOverflowError(OverflowError):
    """A value left the range [0, 2**127 - 1]."""


def check_nat(n: int, name: str = "value") -> int:
    if n < 0:
        raise ValueError(f"{name} must be nonnegative, got {n}")
    if n > NAT_MAX:
        raise NatOverflowError(f"{name} exceeds 2**127-1")
    return n


# ---------------------------------------------------------------------------
# Sieves
# ---------------------------------------------------------------------------

_lock = threading.RLock()
_prime_limit = 1
_prime_flags = np.zeros(2, dtype=bool)
_primes: List[int] = []
_spf: List[int] = []
_squarefree_limit = 0
_squarefree: List[int] = []


def trial_limit() -> int:
    """Trial-division bound, overridable by POWERFUL_LAB_SIEVE_LIMIT."""
    raw = os.environ.get("POWERFUL_LAB_SIEVE_LIMIT")
    if raw:
        return max(2, int(raw.replace("_", "")))
    return DEFAULT_TRIAL_LIMIT


def _sieve_flags(n: int) -> np.ndarray:
    flags = np.ones(n + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for i in range(3, math.isqrt(n) + 1, 2):
        if flags[i]:
            flags[i * i :: 2 * i] = False
    return flags


def primes_upto(n: int) -> List[int]:
    """Ascending list of primes <= n.

    The list is a shared cache: it may extend beyond n, so callers slice with
    bisect when they need an exact cut. Never mutate it.
    """
    global _prime_limit, _prime_flags, _primes
    if n > _prime_limit:
        with _lock:
            if n > _prime_limit:
                limit = max(n, 2 * _prime_limit, 1 << 16)
                flags = _sieve_flags(limit)
                _primes = np.flatnonzero(flags).tolist()
                _prime_flags = flags
                _prime_limit = limit
    return _primes


def prime_list(n: int) -> List[int]:
    primes = primes_upto(n)
    return primes[: bisect_right(primes, n)]


def squarefree_upto(n: int) -> List[int]:
    """Ascending squarefree integers in [1, n] (shared cache, may run past n)."""
    global _squarefree_limit, _squarefree
    if n > _squarefree_limit:
        with _lock:
            if n > _squarefree_limit:
                limit = max(n, 2 * _squarefree_limit, 1 << 12)
                ok = np.ones(limit + 1, dtype=bool)
                ok[0] = False
                for p in range(2, math.isqrt(limit) + 1):
                    ok[p * p :: p * p] = False
                _squarefree = np.flatnonzero(ok).tolist()
                _squarefree_limit = limit
    return _squarefree


def _spf_table() -> List[int]:
    global _spf
    if not _spf:
        with _lock:
            if not _spf:
                spf = np.zeros(SPF_LIMIT, dtype=np.int64)
                for p in prime_list(math.isqrt(SPF_LIMIT - 1)):
                    block = spf[p * p :: p]
                    block[block == 0] = p
                _spf = spf.tolist()
    return _spf


# ---------------------------------------------------------------------------
# Roots
# ---------------------------------------------------------------------------

def ikroot(n: int, k: int) -> int:
    """Largest r with r**k <= n."""
    if n < 0 or k < 1:
        raise ValueError(f"ikroot needs n >= 0 and k >= 1, got n={n}, k={k}")
    if n < 2 or k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    if k >= n.bit_length():
        return 1
    if n.bit_length() < 1000:
        r = int(n ** (1.0 / k))
    else:
        r = 1 << -(-n.bit_length() // k)
        while True:
            s = ((k - 1) * r + n // r ** (k - 1)) // k
            if s >= r:
                break
            r = s
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


# ---------------------------------------------------------------------------
# Primality
# ---------------------------------------------------------------------------

def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_prp(n: int) -> bool:
    # Selfridge method A parameters.
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
        if D == 13 and math.isqrt(n) ** 2 == n:
            return False
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # Binary Lucas chain for U_d, V_d.
    U, V, Qk = 0, 2, 1
    inv2 = (n + 1) // 2
    for bit in bin(d)[2:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test; deterministic below 3.3e24, BPSW above."""
    if n < 2:
        return False
    if n <= _prime_limit:
        return bool(_prime_flags[n])
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < _MR_DETERMINISTIC:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES)
    return _strong_probable_prime(n, 2) and _strong_lucas_prp(n)


# ---------------------------------------------------------------------------
# Factorization
# ---------------------------------------------------------------------------

def _brent_rho(n: int) -> int:
    """A nontrivial factor of the odd composite n (deterministic seeds)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 200):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")


def _split_large(n: int, out: dict) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        f = _brent_rho(m)
        stack += [f, m // f]


def factorize(n: int) -> PrimeFactorization:
    """Canonical factorization [(p, e), ...] with p ascending; [] for n = 1.

    >>> factorize(72)
    [(2, 3), (3, 2)]
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    check_nat(n, "n")
    if n < SPF_LIMIT:
        spf = _spf_table()
        out: list = []
        while n > 1:
            p = spf[n] or n
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out
    found: dict = {}
    for p in prime_list(trial_limit()):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    if n > 1:
        _split_large(n, found)
    return sorted(found.items())


def radical(n: int) -> int:
    """Product of the distinct primes dividing n."""
    r = 1
    for p, _ in factorize(n):
        r *= p
    return r


def fullness(n: int):
    """Smallest exponent in the factorization; INFINITE for n = 1."""
    f = factorize(n)
    return min(e for _, e in f) if f else INFINITE


def is_kfull(n: int, k: int) -> bool:
    return fullness(n) >= k


def is_squarefull(n: int) -> bool:
    return fullness(n) >= 2


def largest_prime_factor(n: int) -> int:
    f = factorize(n)
    return f[-1][0] if f else 1


def smallest_prime_factor(n: int):
    f = factorize(n)
    return f[0][0] if f else INFINITE


def totient(q: int) -> int:
    if q < 1:
        raise ValueError(f"totient needs q >= 1, got {q}")
    phi = q
    for p, _ in factorize(q):
        phi -= phi // p
    return phi


def gcd(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)
