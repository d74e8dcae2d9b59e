"""
Algorithms package for modular square roots.

Contains the field arithmetic, the three Shanks variants and the
verification oracle, plus a dispatch table keyed by variant tag.
"""

from concurrent.futures import Executor
from typing import Callable, Optional

from sqrtmod.algorithms.field_core import PrimeContext, SqrtOutcome
from sqrtmod.algorithms.shanks_baseline import sqrt_v1
from sqrtmod.algorithms.shanks_parallel import sqrt_v3
from sqrtmod.algorithms.shanks_tabulated import sqrt_v2
from sqrtmod.core import ALGORITHM_TAGS, MODE_SEQUENTIAL

ALGORITHMS: dict[str, Callable[..., SqrtOutcome]] = {
    "v1": sqrt_v1,
    "v2": sqrt_v2,
    "v3": sqrt_v3,
}


def solve(
    algorithm: str,
    a: int,
    ctx: PrimeContext,
    check_invariants: Optional[bool] = None,
    mode: str = MODE_SEQUENTIAL,
    executor: Optional[Executor] = None,
) -> SqrtOutcome:
    """
    Run one variant by tag.

    ``mode`` and ``executor`` only affect v3.
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}, expected {ALGORITHM_TAGS}")
    if algorithm == "v3":
        return sqrt_v3(
            a, ctx, mode=mode, check_invariants=check_invariants, executor=executor
        )
    return ALGORITHMS[algorithm](a, ctx, check_invariants=check_invariants)
