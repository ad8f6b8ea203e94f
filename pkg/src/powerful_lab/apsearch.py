"""Three-term progressions and runs of consecutive squarefull numbers."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Tuple

import numpy as np

from .generate import Interval, enumerate_squarefull_interval
from .intcore import ikroot, is_squarefull

_INT64_SAFE = (1 << 62) - 1
DEFAULT_LOG_POWER_C = 0.1


@dataclass(frozen=True, order=True)
class ApTriple:
    n1: int
    n2: int
    n3: int

    def __post_init__(self):
        if not (0 < self.n1 < self.n2 < self.n3 and self.n1 + self.n3 == 2 * self.n2):
            raise ValueError(f"({self.n1}, {self.n2}, {self.n3}) is not a 3-term progression")

    @property
    def step(self) -> int:
        return self.n2 - self.n1

    def members(self) -> Tuple[int, int, int]:
        return (self.n1, self.n2, self.n3)

    def is_squarefull(self) -> bool:
        return all(is_squarefull(n) for n in self.members())


def progressions_in(values: Iterable[int]) -> List[Tuple[int, int, int]]:
    """All (a, b, c) from the set with a < b < c and a + c = 2b, sorted."""
    s = sorted(set(values))
    if len(s) < 3:
        return []
    out = []
    if s[-1] <= _INT64_SAFE // 2 and s[0] >= 0:
        arr = np.asarray(s, dtype=np.int64)
        top = arr[-1]
        for i in range(len(arr) - 2):
            a = arr[i]
            # b <= (a + top) / 2 keeps c = 2b - a inside the set's range
            stop = np.searchsorted(arr, (a + top) // 2, side="right")
            if stop <= i + 1:
                continue
            c = 2 * arr[i + 1 : stop] - a
            idx = np.searchsorted(arr, c)
            found = np.flatnonzero(idx < len(arr))
            found = found[arr[idx[found]] == c[found]]
            a_i = int(a)
            for f in found.tolist():
                b = s[i + 1 + f]
                out.append((a_i, b, 2 * b - a_i))
    else:
        members = set(s)
        for i, a in enumerate(s):
            for b in s[i + 1 :]:
                c = 2 * b - a
                if c > s[-1]:
                    break
                if c in members:
                    out.append((a, b, c))
    out.sort()
    return out


def find_3aps(iv: Interval) -> List[ApTriple]:
    """Non-trivial 3APs among the squarefull numbers of (x, x+y]."""
    return [ApTriple(*t) for t in progressions_in(enumerate_squarefull_interval(iv))]


def window_length(x: int, exponent: float) -> int:
    """floor(x^exponent), exact for small-denominator rational exponents."""
    e = Fraction(exponent).limit_denominator(100)
    return ikroot(x**e.numerator, e.denominator)


@dataclass
class ApSample:
    x: int
    y: int
    squarefull: int
    hits: List[ApTriple] = field(default_factory=list)
    comparator: float = 0.0  # y / log(y+1)^(1+c), for plotting only


@dataclass
class NoApReport:
    exponent: float
    samples: List[ApSample]

    @property
    def findings(self) -> List[ApTriple]:
        return [t for s in self.samples for t in s.hits]


def scan_ap_sample(x: int, exponent: float = 0.2, c: float = DEFAULT_LOG_POWER_C) -> ApSample:
    if not 0 < exponent <= 0.5:
        raise ValueError(f"exponent must lie in (0, 0.5], got {exponent}")
    if c < 0:
        raise ValueError(f"c must be >= 0, got {c}")
    y = window_length(x, exponent)
    if y < 1:
        return ApSample(x, y, 0)
    values = enumerate_squarefull_interval(Interval(x, y))
    hits = [ApTriple(*t) for t in progressions_in(values)]
    return ApSample(x, y, len(values), hits, y / math.log(y + 1) ** (1 + c))


def verify_no_ap_short(x_samples: Iterable[int], exponent: float = 0.2,
                       c: float = DEFAULT_LOG_POWER_C) -> NoApReport:
    """Look for squarefull 3APs in (x, x + floor(x^exponent)] for each sample x.

    Hits are returned, not raised: any one of them would be a notable
    near-miss for the abc conjecture, not a defect.
    """
    return NoApReport(exponent, [scan_ap_sample(x, exponent, c) for x in x_samples])


def _squarefull_through(N: int) -> List[int]:
    return enumerate_squarefull_interval(Interval(0, N))


def find_consecutive_pairs(N: int) -> List[Tuple[int, int]]:
    """(n, n+1) with both squarefull and n <= N."""
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    values = _squarefull_through(N + 1)
    members = set(values)
    return [(n, n + 1) for n in values if n <= N and n + 1 in members]


def find_consecutive_triples(N: int) -> List[Tuple[int, int, int]]:
    """(n, n+1, n+2) all squarefull with n + 2 <= N; expected to be empty."""
    if N < 3:
        raise ValueError(f"N must be >= 3, got {N}")
    values = _squarefull_through(N)
    members = set(values)
    pairs = [n for n in values if n + 1 in members]
    return [(n, n + 1, n + 2) for n in pairs if n + 2 in members]
