"""
Tests for the brute-force oracle, primality testing and Lindhurst's formula.
"""

from fractions import Fraction

import numpy as np
import pytest
from sympy import isprime

from sqrtmod.algorithms.field_core import build_context, euler_is_qr
from sqrtmod.algorithms.oracle import (
    brute_force_roots,
    is_prime_deterministic,
    lindhurst_expected,
    primes_below,
    root_table,
    trial_division_is_prime,
)
from sqrtmod.errors import ModulusTooLarge


class TestBruteForceRoots:
    """Test exhaustive root enumeration."""

    @pytest.mark.parametrize(
        "a, p, roots",
        [(2, 7, {3, 4}), (0, 13, {0}), (3, 5, set()), (10, 13, {6, 7})],
    )
    def test_examples(self, a, p, roots):
        """Test the reference root sets."""
        result = brute_force_roots(a, p)
        assert set(result.roots) == roots
        assert all(x * x % p == a for x in result.roots)

    def test_bound_enforced(self):
        """Test that moduli above the exhaustive bound raise."""
        with pytest.raises(ModulusTooLarge):
            brute_force_roots(4, 1000003)

    def test_root_table_matches_scan(self):
        """Test that the single-scan table agrees with per-a scans."""
        table = root_table(61)
        for a in range(61):
            assert table[a] == brute_force_roots(a, 61)

    def test_sizes_follow_euler(self, small_contexts):
        """Test |roots| in {0, 2} for a != 0, with size 2 exactly for residues."""
        for ctx in small_contexts:
            table = root_table(ctx.p)
            assert len(table[0]) == 1
            for a in range(1, ctx.p):
                size = len(table[a])
                assert size in (0, 2)
                assert euler_is_qr(a, ctx) == (size == 2)


class TestPrimality:
    """Test the deterministic Miller-Rabin check."""

    @pytest.mark.parametrize(
        "n, expected",
        [
            (998244353, True),
            (3221225473, True),
            (65537, True),
            (1 << 16, False),
            (2, True),
            (1, False),
            (561, False),
            (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        ],
    )
    def test_examples(self, n, expected):
        """Test known primes, composites and pseudoprimes."""
        assert is_prime_deterministic(n) is expected

    def test_matches_sympy_on_63_bit_range(self):
        """Test agreement with sympy.isprime on random 63-bit integers."""
        rng = np.random.default_rng(2024)
        candidates = rng.integers(1 << 40, (1 << 63) - 1, size=400, dtype=np.int64)
        for n in [int(c) | 1 for c in candidates]:
            assert is_prime_deterministic(n) == isprime(n)

    @pytest.mark.slow
    def test_matches_trial_division_below_one_million(self):
        """Test agreement with a sieve and trial division for all n < 10^6."""
        sieve = set(primes_below(10**6))
        for n in range(2, 10**6):
            assert is_prime_deterministic(n) == (n in sieve)
        for n in range(2, 5000):
            assert trial_division_is_prime(n) == (n in sieve)

    def test_benchmark_primes_verified(self):
        """Test that the benchmark primes build contexts."""
        for p in (65537, 998244353, 3221225473):
            assert build_context(p).p == p


class TestLindhurst:
    """Test the average loop cost formula."""

    @pytest.mark.parametrize(
        "n, expected",
        [
            (4, Fraction(65, 8)),
            (1, Fraction(0)),
            (2, Fraction(2)),
            (3, Fraction(19, 4)),
            (30, Fraction(549, 2) + Fraction(1, 2**29)),
        ],
    )
    def test_values(self, n, expected):
        """Test exact rational values."""
        assert lindhurst_expected(n) == expected

    def test_rejects_zero(self):
        """Test that n < 1 raises."""
        with pytest.raises(ValueError):
            lindhurst_expected(0)
