"""Helpers for exact cost accounting and reproducible inputs."""

import numpy as np

from sqrtmod.algorithms.field_core import PrimeContext

BENCHMARK_PRIMES = (65537, 998244353, 3221225473)


def pow_cost(e: int) -> int:
    """Multiplications charged by left-to-right binary exponentiation."""
    if e <= 1:
        return 0
    return (e.bit_length() - 1) + (bin(e).count("1") - 1)


def init_cost(ctx: PrimeContext) -> int:
    """Step-1 exponentiations x = a^((q+1)/2) and b = a^q."""
    return pow_cost((ctx.q + 1) // 2) + pow_cost(ctx.q)


def random_residues(ctx: PrimeContext, count: int, seed: int) -> list[int]:
    """Quadratic residues r^2 mod p for reproducible random r."""
    rng = np.random.default_rng(seed)
    draws = rng.integers(1, ctx.p, size=count, dtype=np.int64)
    return [r * r % ctx.p for r in draws.tolist()]


def order_exponents(m_sequence: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    """(k, m) pairs of each loop pass, starting from k = n."""
    pairs = []
    k = n
    for m in m_sequence:
        pairs.append((k, m))
        k = m
    return pairs
