"""Arithmetic ingredients: gcd, prime sieve, prime counting, primorials,
the prime set D(n) and prime-power exponents."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapExceededError

SIEVE_CAP = 10**7


@dataclass(frozen=True, eq=False)
class PrimeTables:
    """Sieve output for ``1..limit``.

    ``pi_of[m]`` is the number of primes ``<= m`` for ``0 <= m <= limit``.
    """

    limit: int
    primes: tuple[int, ...]
    pi_of: np.ndarray

    def __post_init__(self) -> None:
        self.pi_of.setflags(write=False)

    def is_prime(self, m: int) -> bool:
        if not 0 <= m <= self.limit:
            raise ValueError(f"{m} outside sieve range [0, {self.limit}]")
        return m >= 2 and self.pi_of[m] != self.pi_of[m - 1]


@dataclass(frozen=True)
class PrimorialInfo:
    k: int
    value: int
    next_prime: int


def gcd(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise ValueError(f"gcd is defined here for positive integers, got ({a}, {b})")
    return math.gcd(a, b)


def build_prime_tables(n: int, cap: int = SIEVE_CAP) -> PrimeTables:
    """Sieve of Eratosthenes over ``[0, n]``."""
    if n < 1:
        raise ValueError(f"sieve limit must be >= 1, got {n}")
    if n > cap:
        raise CapExceededError(f"sieve limit {n} exceeds configured cap {cap}")
    is_p = np.ones(n + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if is_p[p]:
            is_p[p * p :: p] = False
    primes = tuple(int(p) for p in np.flatnonzero(is_p))
    pi_of = np.cumsum(is_p, dtype=np.int64)
    return PrimeTables(limit=n, primes=primes, pi_of=pi_of)


def prime_pi(tables: PrimeTables, m: int) -> int:
    if not 0 <= m <= tables.limit:
        raise ValueError(f"m={m} outside sieve range [0, {tables.limit}]")
    return int(tables.pi_of[m])


def dominating_primes(tables: PrimeTables, n: int) -> list[int]:
    """Primes p with n/2 < p <= n.

    Every such p is coprime to all of 1..n, so its vertex is universal.
    The upper end is inclusive (n itself counts when prime).
    """
    if not 1 <= n <= tables.limit:
        raise ValueError(f"n={n} outside sieve range [1, {tables.limit}]")
    return [p for p in tables.primes if 2 * p > n and p <= n]


def largest_primorial_leq(n: int) -> PrimorialInfo:
    """Largest k with p_k# = 2*3*...*p_k <= n."""
    if n < 2:
        raise ValueError(f"no primorial p_k# (k >= 1) is <= {n}")
    k, value, p = 0, 1, 2
    while True:
        if value * p > n:
            return PrimorialInfo(k=k, value=value, next_prime=p)
        k += 1
        value *= p
        p = _next_prime(p)


def _next_prime(p: int) -> int:
    q = p + 1
    while any(q % d == 0 for d in range(2, math.isqrt(q) + 1)):
        q += 1
    return q


def coprime_set(n: int, m: int) -> list[int]:
    if n < 1 or m < 1:
        raise ValueError(f"need n >= 1 and m >= 1, got ({n}, {m})")
    return [x for x in range(1, n + 1) if math.gcd(x, m) == 1]


def prime_power_exponents(tables: PrimeTables, n: int) -> dict[int, int]:
    """For each prime p <= n, the k with p**k <= n < p**(k+1)."""
    if not 2 <= n <= tables.limit:
        raise ValueError(f"n={n} outside [2, {tables.limit}]")
    out = {}
    for p in tables.primes:
        if p > n:
            break
        k, power = 1, p
        # integer multiply, compared before stepping: no float logs
        while power <= n // p:
            power *= p
            k += 1
        out[p] = k
    return out


def nullity_lower_bound(tables: PrimeTables, n: int) -> int:
    exps = prime_power_exponents(tables, n)
    return sum(exps.values()) - len(exps)
