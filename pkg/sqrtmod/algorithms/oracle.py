"""
Ground-truth machinery independent of the Shanks variants.

Brute-force square roots, exhaustive root tables, deterministic primality
and Lindhurst's average loop cost.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from sqrtmod.core import EXHAUSTIVE_BOUND, PRIMALITY_WITNESSES
from sqrtmod.errors import ModulusTooLarge

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class RootSet:
    """All square roots of a modulo p."""

    a: int
    p: int
    roots: frozenset[int]

    def __contains__(self, x: object) -> bool:
        return x in self.roots

    def __len__(self) -> int:
        return len(self.roots)


def _squares(p: int) -> np.ndarray:
    if p > EXHAUSTIVE_BOUND:
        raise ModulusTooLarge(p, EXHAUSTIVE_BOUND)
    xs = np.arange(p, dtype=np.int64)
    return (xs * xs) % p


def brute_force_roots(a: int, p: int) -> RootSet:
    """Every x in [0, p) with x^2 = a (mod p), by a full scan."""
    squares = _squares(p)
    roots = np.flatnonzero(squares == a % p)
    return RootSet(a=a % p, p=p, roots=frozenset(int(x) for x in roots))


def root_table(p: int) -> dict[int, RootSet]:
    """RootSet for every a in [0, p), built from a single scan of the squares."""
    squares = _squares(p)
    found: dict[int, set[int]] = {a: set() for a in range(p)}
    for x, square in enumerate(squares.tolist()):
        found[square].add(x)
    return {a: RootSet(a=a, p=p, roots=frozenset(xs)) for a, xs in found.items()}


def is_prime_deterministic(n: int) -> bool:
    """
    Miller-Rabin with a fixed witness set.

    The first twelve primes as witnesses decide primality exactly for every
    n < 3.3e24, which covers the whole 63-bit range.
    """
    if n < 2:
        return False
    for w in PRIMALITY_WITNESSES:
        if n % w == 0:
            return n == w

    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for w in PRIMALITY_WITNESSES:
        y = pow(w, d, n)
        if y == 1 or y == n - 1:
            continue
        for _ in range(s - 1):
            y = y * y % n
            if y == n - 1:
                break
        else:
            return False
    return True


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_below(bound: int) -> list[int]:
    """Primes p < bound via a sieve of Eratosthenes."""
    if bound < 3:
        return []
    sieve = np.ones(bound, dtype=bool)
    sieve[:2] = False
    for d in range(2, int(bound**0.5) + 1):
        if sieve[d]:
            sieve[d * d :: d] = False
    return [int(p) for p in np.flatnonzero(sieve)]


def lindhurst_expected(n: int) -> Fraction:
    """Average loop cost of Shanks' algorithm, (n^2 + 7n - 12)/4 + 1/2^(n-1)."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return Fraction(n * n + 7 * n - 12, 4) + Fraction(1, 2 ** (n - 1))
