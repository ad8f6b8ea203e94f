"""abc triples: coprime reduction, radical quality, progression certificates, gap scans."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import List

from .apsearch import ApTriple
from .generate import Interval, enumerate_kfull_upto, enumerate_squarefull_interval
from .intcore import factorize, radical


@dataclass(frozen=True)
class AbcTriple:
    a: int
    b: int
    c: int
    rad: int
    quality: float

    @property
    def interesting(self) -> bool:
        return self.quality > 1

    def as_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "rad": self.rad,
                "quality": round(self.quality, 4)}


def abc_triple(a: int, b: int, c: int, rad: int = None) -> AbcTriple:
    """Validate a + b = c with pairwise coprime positive parts and attach rad and quality."""
    if a > b:
        a, b = b, a
    if not (0 < a <= b < c and a + b == c):
        raise ValueError(f"({a}, {b}, {c}) is not a positive solution of a + b = c")
    if math.gcd(a, b) != 1:
        raise ValueError(f"({a}, {b}, {c}) is not coprime")
    if rad is None:
        rad = radical(a) * radical(b) * radical(c)
    return AbcTriple(a, b, c, rad, math.log(c) / math.log(rad))


def abc_quality(t: AbcTriple) -> float:
    """log c / log rad(abc)."""
    if t.rad < 2:
        raise ValueError("quality is undefined when rad(abc) = 1")
    return math.log(t.c) / math.log(t.rad)


def make_coprime_triple(b: int, c: int) -> AbcTriple:
    """Reduce b < c (with a = c - b) by d = gcd(a, b) into a coprime abc triple."""
    if not 0 < b < c:
        raise ValueError(f"need 0 < b < c, got b={b}, c={c}")
    a = c - b
    d = math.gcd(a, b)
    return abc_triple(a // d, b // d, c // d)


@dataclass(frozen=True)
class GapRecord:
    b: int
    c: int
    gap: int
    exponent: float  # log(gap) / log(c)

    def as_dict(self) -> dict:
        return {"b": self.b, "c": self.c, "gap": self.gap, "exponent": round(self.exponent, 4)}


def powerful_gap_scan(N: int, k: int, gap_max: int) -> List[GapRecord]:
    """Consecutive k-full b < c <= N with c - b <= gap_max, smallest exponent first."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if gap_max < 1:
        raise ValueError(f"gap_max must be >= 1, got {gap_max}")
    if k == 2:
        values = enumerate_squarefull_interval(Interval(0, N))
    else:
        values = enumerate_kfull_upto(N, k)
    out = [
        GapRecord(b, c, c - b, math.log(c - b) / math.log(c))
        for b, c in zip(values, values[1:])
        if c - b <= gap_max
    ]
    out.sort(key=lambda g: (g.exponent, g.c))
    return out


@dataclass(frozen=True)
class ApCertificate:
    progression: ApTriple
    d: int  # common difference
    D: int  # gcd(n2, d)
    triple: AbcTriple

    def as_dict(self) -> dict:
        row = {"n1": self.progression.n1, "n2": self.progression.n2,
               "n3": self.progression.n3, "d": self.d, "D": self.D}
        row.update(self.triple.as_dict())
        return row


def _exponents(*ns: int) -> Counter:
    out = Counter()
    for n in ns:
        for p, e in factorize(n):
            out[p] += e
    return out


def _reduced_radical(num: Counter, den: Counter) -> int:
    rad = 1
    for p, e in num.items():
        if e > den.get(p, 0):
            rad *= p
    return rad


def ap_abc_certificate(t: ApTriple) -> ApCertificate:
    """Turn n1 + n3 = 2 n2 into the coprime equation n1 n3 / D^2 + d^2 / D^2 = n2^2 / D^2.

    Uses (n2 - d)(n2 + d) + d^2 = n2^2 with d the common difference and
    D = gcd(n2, d), so that gcd(n2^2, d^2) = D^2. The radical is assembled
    from the factorizations of n1, n2, n3 and d rather than of the
    (much larger) reduced parts.
    """
    n1, n2, n3 = t.members()
    if n1 + n3 != 2 * n2 or not 0 < n1 < n2:
        raise ValueError(f"{t} is not a 3-term progression")
    d = n2 - n1
    D = math.gcd(n2, d)
    D2 = D * D
    a, b, c = n1 * n3 // D2, d * d // D2, n2 * n2 // D2
    if a + b != c:
        raise ArithmeticError("certificate identity failed")
    twice_D = Counter({p: 2 * e for p, e in _exponents(D).items()})
    rad = (
        _reduced_radical(_exponents(n1, n3), twice_D)
        * _reduced_radical(_exponents(d, d), twice_D)
        * _reduced_radical(_exponents(n2, n2), twice_D)
    )
    return ApCertificate(t, d, D, abc_triple(a, b, c, rad))
