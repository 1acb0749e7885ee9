"""Exact rank of integer matrices by Gaussian elimination modulo large primes.

Rank mod p never exceeds the rational rank, and equals it unless p divides
every nonzero maximal minor, so the maximum over a few random primes near
2**61 is the rational rank with overwhelming probability.
"""

from __future__ import annotations

import random
from functools import lru_cache

import numpy as np
from sympy import nextprime

from .matrix import SymmetricIntMatrix

DEFAULT_SEED = 0
N_PRIMES = 3
PRIME_LOW, PRIME_HIGH = 1 << 60, 1 << 61


@lru_cache(maxsize=64)
def random_primes(seed: int = DEFAULT_SEED, count: int = N_PRIMES) -> tuple[int, ...]:
    """``count`` distinct primes in (2**60, 2**61), reproducible from ``seed``."""
    rng = random.Random(seed)
    out: list[int] = []
    while len(out) < count:
        p = nextprime(rng.randrange(PRIME_LOW, PRIME_HIGH - (1 << 20)))
        if p < PRIME_HIGH and p not in out:
            out.append(int(p))
    return tuple(out)


def rank_mod_p(entries, p: int) -> int:
    """Row-echelon rank over GF(p), with Python ints to avoid overflow."""
    a = np.array(entries, dtype=object) % p
    if a.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = (a[r, c:] * inv) % p
        below = r + 1 + np.flatnonzero(a[r + 1 :, c])
        if below.size:
            a[below, c:] = (a[below, c:] - np.outer(a[below, c], a[r, c:])) % p
        r += 1
    return r


def exact_rank(m: SymmetricIntMatrix | np.ndarray, seed: int = DEFAULT_SEED, primes=None) -> int:
    entries = m.entries if isinstance(m, SymmetricIntMatrix) else np.asarray(m)
    if entries.size == 0:
        return 0
    primes = random_primes(seed) if primes is None else primes
    return max(rank_mod_p(entries, p) for p in primes)


def exact_eigen_multiplicity(m: SymmetricIntMatrix, lam: int, seed: int = DEFAULT_SEED) -> int:
    """Nullity of ``M - lam*I``; the multiplicity of ``lam`` since M is diagonalisable."""
    if int(lam) != lam:
        raise ValueError(f"exact multiplicity needs an integer eigenvalue, got {lam}")
    return m.order - exact_rank(m.shifted(int(lam)), seed=seed)


def identical_rows(m: SymmetricIntMatrix, i: int, j: int) -> bool:
    """Rows ``i`` and ``j`` (0-based) are equal."""
    return bool(np.array_equal(m.entries[i], m.entries[j]))


def is_singular(m: SymmetricIntMatrix, seed: int = DEFAULT_SEED) -> bool:
    return exact_rank(m, seed=seed) < m.order
