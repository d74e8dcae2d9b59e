"""
Parallel Shanks variant.

Live tables of b^(2^j) and z^(2^j) are kept, so the least m is a scan of
lookups and every power of the new b = b*z is one independent multiplication
b^(2^j) * z^(2^j). Those m+1 multiplications form a single fork-join round.
"""

import logging
import os
from concurrent.futures import Executor, ThreadPoolExecutor
from contextlib import nullcontext
from dataclasses import dataclass
from typing import Optional

from sqrtmod.algorithms.field_core import (
    OpCounter,
    PowerTable,
    PrimeContext,
    Residue,
    SqrtOutcome,
    build_power_table,
    check_square_relation,
    mul,
    table_lookup,
)
from sqrtmod.algorithms.shanks_baseline import (
    initial_values,
    prepare_input,
    zero_outcome,
)
from sqrtmod.algorithms.shanks_tabulated import ZRef
from sqrtmod.core import (
    CHECK_INVARIANTS,
    EXECUTION_MODES,
    MODE_CONCURRENT,
    MODE_SEQUENTIAL,
)
from sqrtmod.errors import InvariantViolation, NotAResidue, OrderExceedsBound

logger = logging.getLogger(__name__)


@dataclass(slots=True)
class ParallelState:
    """b_table holds b^(2^j) for the current b and 0 <= j <= k."""

    k: int
    x: Residue
    z_shift: ZRef
    b_table: PowerTable
    z_table: PowerTable
    rounds: int = 0

    @property
    def b(self) -> Residue:
        return self.b_table.entries[0]


def worker_count(n: int) -> int:
    """min(n, available CPUs); results never depend on it."""
    return max(1, min(n, os.cpu_count() or 1))


def _refresh_slot(
    j: int, st: ParallelState, z_next: ZRef, ctx: PrimeContext
) -> tuple[Residue, OpCounter]:
    """new_b^(2^j) = old_b^(2^j) * z^(2^j); tallies go to a task-local counter."""
    tally = OpCounter(phase="loop")
    old = table_lookup(st.b_table, j, tally)
    zpow = z_next.power(st.z_table, j, tally)
    return mul(old, zpow, ctx, tally), tally


def refresh_b_table(
    st: ParallelState,
    m: int,
    ctx: PrimeContext,
    ctr: OpCounter,
    executor: Optional[Executor] = None,
) -> ParallelState:
    """
    Replace the powers of b by those of b*z for exponents 0..m in one round.

    st.z_shift must already reference the new z. The m+1 products read only
    the old b table and the z table and write disjoint slots; with an
    executor they run as concurrent tasks and collecting the results is the
    barrier. Task tallies are merged in slot order after the barrier, so the
    counts do not depend on how the tasks were scheduled.

    Raises:
        IndexOutOfRange: the z table does not reach shift + m
    """
    slots = range(m + 1)
    if executor is None:
        results = [_refresh_slot(j, st, st.z_shift, ctx) for j in slots]
    else:
        results = list(
            executor.map(lambda j: _refresh_slot(j, st, st.z_shift, ctx), slots)
        )

    for _, tally in results:
        ctr.merge(tally)
    entries = tuple(value for value, _ in results)
    st.b_table = PowerTable(base=entries[0], entries=entries)
    st.rounds += 1
    return st


def least_m_by_lookup(st: ParallelState, ctr: OpCounter) -> int:
    """Least m >= 1 with b^(2^m) = 1, read from the live b table."""
    for j in range(1, st.k + 1):
        if table_lookup(st.b_table, j, ctr) == 1:
            return j
    raise OrderExceedsBound(st.b, st.k)


def sqrt_v3(
    a: int,
    ctx: PrimeContext,
    mode: str = MODE_SEQUENTIAL,
    check_invariants: Optional[bool] = None,
    executor: Optional[Executor] = None,
) -> SqrtOutcome:
    """
    Square root of a modulo p by the parallel variant.

    Args:
        a: Quadratic residue (or 0); reduced modulo p first
        ctx: Prime context
        mode: "sequential-simulated" runs every refresh task on the caller;
            "concurrent" dispatches them to a thread pool
        check_invariants: Verify invariants after every pass
        executor: Pool reused in concurrent mode; a private pool of
            worker_count(n) threads is created when omitted

    Returns:
        SqrtOutcome with rounds and the modeled critical path populated

    Raises:
        NotAResidue: a has no square root modulo p
    """
    if mode not in EXECUTION_MODES:
        raise ValueError(
            f"unknown execution mode {mode!r}, expected one of {EXECUTION_MODES}"
        )
    checking = CHECK_INVARIANTS if check_invariants is None else check_invariants
    a = prepare_input(a, ctx)
    if a == 0:
        return zero_outcome("v3", rounds=0)

    if mode == MODE_CONCURRENT and executor is None:
        pool = ThreadPoolExecutor(
            max_workers=worker_count(ctx.n), thread_name_prefix="sqrt-v3"
        )
    else:
        pool = nullcontext(executor)
    with pool as active:
        dispatch = active if mode == MODE_CONCURRENT else None
        return _run_v3(a, ctx, checking, dispatch)


def _run_v3(
    a: Residue, ctx: PrimeContext, checking: bool, executor: Optional[Executor]
) -> SqrtOutcome:
    n = ctx.n
    ctr = OpCounter()
    x, b = initial_values(a, ctx, ctr)
    z_table = build_power_table(ctx.z0, n, ctx, ctr)
    b_table = build_power_table(b, n, ctx, ctr)
    ctr.enter_loop()

    st = ParallelState(k=n, x=x, z_shift=ZRef(0), b_table=b_table, z_table=z_table)
    serial_muls = 0
    iters = 0
    m_sequence: list[int] = []

    while table_lookup(st.b_table, 0, ctr) != 1:
        if iters >= n:
            raise InvariantViolation("sqrt_v3", f"more than n={n} loop passes")
        try:
            m = least_m_by_lookup(st, ctr)
        except OrderExceedsBound as e:
            raise NotAResidue(a, ctx.p) from e

        t = st.z_shift.advance(st.k - m - 1)
        st.z_shift = t.advance(1)
        st.x = mul(st.x, t.value(z_table, ctr), ctx, ctr)
        serial_muls += 1
        st.k = m
        refresh_b_table(st, m, ctx, ctr, executor)
        iters += 1
        m_sequence.append(m)

        if checking:
            check_square_relation(st.x, a, st.b, ctx, f"sqrt_v3 pass {iters}")
            _check_table_consistency(st, ctx)

    logger.debug(f"sqrt_v3({a}) mod {ctx.p}: {st.rounds} rounds, m {m_sequence}")
    return SqrtOutcome(
        root=st.x,
        counter=ctr.snapshot(),
        loop_iterations=iters,
        m_sequence=tuple(m_sequence),
        rounds=st.rounds,
        critical_path=ctr.mul_init + serial_muls + st.rounds,
        z_table_builds=1,
        b_table_builds=1,
        algorithm="v3",
    )


def _check_table_consistency(st: ParallelState, ctx: PrimeContext) -> None:
    entries = st.b_table.entries
    if len(entries) != st.k + 1:
        raise InvariantViolation("sqrt_v3 refresh", "b table not truncated to k")
    for j in range(len(entries) - 1):
        if entries[j + 1] != entries[j] * entries[j] % ctx.p:
            raise InvariantViolation(
                "sqrt_v3 refresh", f"entry {j + 1} is not the square of entry {j}"
            )
