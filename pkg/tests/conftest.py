"""Shared fixtures for the test suite."""

import pytest

from sqrtmod.algorithms.field_core import PrimeContext, build_context
from sqrtmod.algorithms.oracle import primes_below
from tests.helpers import BENCHMARK_PRIMES


@pytest.fixture(scope="session")
def small_primes() -> list[int]:
    """Odd primes below 2000."""
    return [p for p in primes_below(2000) if p > 2]


@pytest.fixture(scope="session")
def small_contexts(small_primes) -> list[PrimeContext]:
    return [build_context(p) for p in small_primes]


@pytest.fixture(scope="session")
def benchmark_contexts() -> list[PrimeContext]:
    return [build_context(p) for p in BENCHMARK_PRIMES]


@pytest.fixture
def ctx17() -> PrimeContext:
    return build_context(17)
