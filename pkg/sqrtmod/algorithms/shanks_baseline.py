"""
Shanks' original square root loop with instrumented operation counts.

    1. k = n, z = u^q, x = a^((q+1)/2), b = a^q
    2. m = least integer with b^(2^m) = 1
    3. t = z^(2^(k-m-1)), z = t^2, b = b*z, x = x*t
    4. stop if b = 1, else k = m and repeat from 2

x^2 = a*b (mod p) holds at every stage, so b = 1 leaves x as the root.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

from sqrtmod.algorithms.field_core import (
    OpCounter,
    PrimeContext,
    Residue,
    SqrtOutcome,
    check_exact_order,
    check_order_below,
    check_square_relation,
    euler_is_qr,
    mul,
    pow_mod,
)
from sqrtmod.core import CHECK_INVARIANTS
from sqrtmod.errors import InvariantViolation, NotAResidue, OrderExceedsBound

logger = logging.getLogger(__name__)


@dataclass(slots=True)
class LoopState:
    """Variables of the main loop; ord(z) = 2^k exactly and ord(b) < ord(z)."""

    k: int
    x: Residue
    b: Residue
    z: Residue
    ctr: OpCounter
    iters: int = 0
    m_sequence: list[int] = field(default_factory=list)


def prepare_input(a: int, ctx: PrimeContext) -> Residue:
    """Reduce a modulo p and reject nonresidues up front."""
    a = ctx.reduce(a)
    if a != 0 and not euler_is_qr(a, ctx):
        raise NotAResidue(a, ctx.p)
    return a


def initial_values(a: Residue, ctx: PrimeContext, ctr: OpCounter) -> tuple[int, int]:
    """Step 1 exponentiations: x = a^((q+1)/2) and b = a^q, charged to init."""
    x = pow_mod(a, (ctx.q + 1) // 2, ctx, ctr)
    b = pow_mod(a, ctx.q, ctx, ctr)
    return x, b


def zero_outcome(algorithm: str, rounds: Optional[int] = None) -> SqrtOutcome:
    return SqrtOutcome(
        root=0,
        counter=OpCounter(phase="loop"),
        loop_iterations=0,
        rounds=rounds,
        algorithm=algorithm,
    )


def least_order_exponent(
    b: Residue, k_max: int, ctx: PrimeContext, ctr: OpCounter
) -> int:
    """
    Least m >= 0 with b^(2^m) = 1, found by squaring b until it reaches 1.

    Charges exactly m multiplications.

    Raises:
        OrderExceedsBound: 1 was not reached within k_max squarings
    """
    m = 0
    while b != 1:
        if m >= k_max:
            raise OrderExceedsBound(b, k_max)
        b = mul(b, b, ctx, ctr)
        m += 1
    return m


def sqrt_v1(
    a: int, ctx: PrimeContext, check_invariants: Optional[bool] = None
) -> SqrtOutcome:
    """
    Square root of a modulo p by Shanks' original loop.

    Args:
        a: Quadratic residue (or 0); reduced modulo p first
        ctx: Prime context supplying n, q and z0 = u^q
        check_invariants: Verify loop invariants after every pass
            (defaults to SQRTMOD_CHECK_INVARIANTS)

    Returns:
        SqrtOutcome with the root, counts and the sequence of m values

    Raises:
        NotAResidue: a has no square root modulo p
    """
    checking = CHECK_INVARIANTS if check_invariants is None else check_invariants
    a = prepare_input(a, ctx)
    if a == 0:
        return zero_outcome("v1")

    ctr = OpCounter()
    x, b = initial_values(a, ctx, ctr)
    ctr.enter_loop()
    st = LoopState(k=ctx.n, x=x, b=b, z=ctx.z0, ctr=ctr)
    if checking:
        check_square_relation(st.x, a, st.b, ctx, "sqrt_v1 initialization")

    while st.b != 1:
        if st.iters >= ctx.n:
            raise InvariantViolation("sqrt_v1", f"more than n={ctx.n} loop passes")
        if checking:
            check_exact_order(st.z, st.k, ctx, "sqrt_v1 loop entry")
            check_order_below(st.b, st.k, ctx, "sqrt_v1 loop entry")

        try:
            m = least_order_exponent(st.b, st.k - 1, ctx, ctr)
        except OrderExceedsBound as e:
            raise NotAResidue(a, ctx.p) from e

        t = st.z
        for _ in range(st.k - m - 1):
            t = mul(t, t, ctx, ctr)
        st.z = mul(t, t, ctx, ctr)
        st.b = mul(st.b, st.z, ctx, ctr)
        st.x = mul(st.x, t, ctx, ctr)
        st.k = m
        st.iters += 1
        st.m_sequence.append(m)

        if checking:
            check_square_relation(st.x, a, st.b, ctx, f"sqrt_v1 pass {st.iters}")

    logger.debug(f"sqrt_v1({a}) mod {ctx.p}: m sequence {st.m_sequence}")
    return SqrtOutcome(
        root=st.x,
        counter=ctr.snapshot(),
        loop_iterations=st.iters,
        m_sequence=tuple(st.m_sequence),
        algorithm="v1",
    )
