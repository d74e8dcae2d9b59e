"""
Tabulated Shanks variant with O(log q + n^(3/2)) multiplications.

Powers of z are precomputed once; every z_i is some z0^(2^l), so raising it
to 2^m is an index shift into that table. Powers of b are tabulated at the
start of each block of at most ceil(sqrt(n)) inner passes, and the search for
m evaluates b0^(2^m') * z_1^(2^m') * ... * z_i^(2^m') from the two tables
instead of squaring b.
"""

import logging
from dataclasses import dataclass, field
from math import isqrt
from typing import Optional

from sqrtmod.algorithms.field_core import (
    OpCounter,
    PowerTable,
    PrimeContext,
    Residue,
    SqrtOutcome,
    build_power_table,
    check_order_below,
    check_square_relation,
    mul,
    table_lookup,
)
from sqrtmod.algorithms.shanks_baseline import (
    initial_values,
    prepare_input,
    zero_outcome,
)
from sqrtmod.core import CHECK_INVARIANTS
from sqrtmod.errors import InvariantViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class ZRef:
    """Reference to z0^(2^shift), an entry of the z power table."""

    shift: int

    def advance(self, steps: int) -> "ZRef":
        """Squaring ``steps`` times is a shift; no multiplication involved."""
        return ZRef(self.shift + steps)

    def value(self, z_table: PowerTable, ctr: OpCounter) -> Residue:
        return table_lookup(z_table, self.shift, ctr)

    def power(self, z_table: PowerTable, m: int, ctr: OpCounter) -> Residue:
        """(z0^(2^shift))^(2^m) by a single lookup."""
        return table_lookup(z_table, self.shift + m, ctr)


@dataclass(slots=True)
class BlockState:
    """
    State of one block of inner passes.

    b is the running product b0 * z_1 * ... * z_i and z is the current z_i
    (z_0 at block start), whose order is exactly 2^k.
    """

    k: int
    x: Residue
    b: Residue
    b0: Residue
    b_table: PowerTable
    z_table: PowerTable
    z: ZRef
    i: int = 0
    z_refs: list[ZRef] = field(default_factory=list)


def block_size(n: int) -> int:
    """ceil(sqrt(n)), the number of inner passes between b-table rebuilds."""
    root = isqrt(n)
    return root if root * root == n else root + 1


def product_is_one_at(
    m: int, st: BlockState, ctx: PrimeContext, ctr: OpCounter
) -> bool:
    """
    Whether b0^(2^m) * z_1^(2^m) * ... * z_i^(2^m) = 1 (mod p).

    Uses i+1 lookups and exactly i multiplications.
    """
    product = table_lookup(st.b_table, m, ctr)
    for ref in st.z_refs:
        product = mul(product, ref.power(st.z_table, m, ctr), ctx, ctr)
    return product == 1


def find_least_m(st: BlockState, ctx: PrimeContext, ctr: OpCounter) -> int:
    """
    Least m with the block product of 2^m-th powers equal to 1.

    Scans downward and stops at the first exponent whose product is not 1;
    the answer is one above it. The product at k-1 is already 1 because the
    order of b divides 2^(k-1), so the scan evaluates k-m exponents at i
    multiplications each.
    """
    for m_prime in range(st.k - 2, -1, -1):
        if not product_is_one_at(m_prime, st, ctx, ctr):
            return m_prime + 1
    return 0


def sqrt_v2(
    a: int, ctx: PrimeContext, check_invariants: Optional[bool] = None
) -> SqrtOutcome:
    """
    Square root of a modulo p by the tabulated variant.

    Finds the same sequence of m values as sqrt_v1. The z table is built once
    per call (charged to init together with the first b table); b tables are
    rebuilt at each block boundary, truncated to the current order bound k.

    Raises:
        NotAResidue: a has no square root modulo p
    """
    checking = CHECK_INVARIANTS if check_invariants is None else check_invariants
    a = prepare_input(a, ctx)
    if a == 0:
        return zero_outcome("v2")

    n = ctx.n
    ctr = OpCounter()
    x, b = initial_values(a, ctx, ctr)
    z_table = build_power_table(ctx.z0, n, ctx, ctr)
    b_table = build_power_table(b, n, ctx, ctr)
    b_builds = 1
    ctr.enter_loop()

    limit = block_size(n)
    st = BlockState(
        k=n, x=x, b=b, b0=b, b_table=b_table, z_table=z_table, z=ZRef(0)
    )
    iters = 0
    m_sequence: list[int] = []

    while st.b != 1:
        if iters >= n:
            raise InvariantViolation("sqrt_v2", f"more than n={n} loop passes")
        if checking:
            check_order_below(st.b, st.k, ctx, "sqrt_v2 search")

        m = find_least_m(st, ctx, ctr)
        t = st.z.advance(st.k - m - 1)
        z_next = t.advance(1)
        st.b = mul(st.b, z_next.value(z_table, ctr), ctx, ctr)
        st.x = mul(st.x, t.value(z_table, ctr), ctx, ctr)
        st.z_refs.append(z_next)
        st.z = z_next
        st.i += 1
        st.k = m
        iters += 1
        m_sequence.append(m)

        if checking:
            check_square_relation(st.x, a, st.b, ctx, f"sqrt_v2 pass {iters}")
            _check_running_product(st, ctx)

        if st.b != 1 and st.i >= limit:
            # New block: tabulate the current b and restart the product at it
            st.b_table = build_power_table(st.b, st.k, ctx, ctr)
            b_builds += 1
            st.b0 = st.b
            st.z_refs = []
            st.i = 0

    logger.debug(
        f"sqrt_v2({a}) mod {ctx.p}: {iters} passes, {b_builds} b tables, "
        f"m sequence {m_sequence}"
    )
    return SqrtOutcome(
        root=st.x,
        counter=ctr.snapshot(),
        loop_iterations=iters,
        m_sequence=tuple(m_sequence),
        z_table_builds=1,
        b_table_builds=b_builds,
        algorithm="v2",
    )


def _check_running_product(st: BlockState, ctx: PrimeContext) -> None:
    product = st.b0
    for ref in st.z_refs:
        product = product * st.z_table.entries[ref.shift] % ctx.p
    if product != st.b:
        raise InvariantViolation(
            "sqrt_v2 block", f"b={st.b} differs from b0*z_1*...*z_i={product}"
        )
