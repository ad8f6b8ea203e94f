"""Enumeration, counting and structure of powerful (k-full) numbers."""

__version__ = "0.1.0"

from .intcore import (  # noqa: E402
    INFINITE,
    NAT_MAX,
    NatOverflowError,
    factorize,
    fullness,
    gcd,
    ikroot,
    is_kfull,
    is_prime,
    largest_prime_factor,
    radical,
    smallest_prime_factor,
    totient,
)
from .generate import (  # noqa: E402
    Interval,
    enumerate_kfull_interval,
    enumerate_kfull_upto,
    enumerate_smooth_kfull_interval,
    enumerate_squarefull_interval,
)
