"""
Field Core Module

Modular arithmetic over an odd prime modulus below 2^63, prime-context
construction and the operation counter shared by every algorithm variant.

Cost model: one modular multiplication (a squaring included) is one unit,
a power-table lookup is counted separately.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Literal, Optional

from sqrtmod.algorithms.oracle import is_prime_deterministic
from sqrtmod.core import MAX_MODULUS
from sqrtmod.errors import (
    CompositeModulus,
    IndexOutOfRange,
    InvariantViolation,
    ModulusTooLarge,
    UnsupportedModulus,
)

logger = logging.getLogger(__name__)

Residue = int
Phase = Literal["init", "loop"]


@dataclass(frozen=True, slots=True)
class PrimeContext:
    """A prime p = 2^n * q + 1 together with a verified nonresidue u and z0 = u^q."""

    p: int
    n: int
    q: int
    u: Residue
    z0: Residue

    def reduce(self, value: int) -> Residue:
        """Map an arbitrary integer to its residue in [0, p)."""
        return value % self.p


@dataclass(frozen=True, slots=True)
class PowerTable:
    """Successive squarings [base^(2^0), base^(2^1), ..., base^(2^L)]."""

    base: Residue
    entries: tuple[Residue, ...]

    @property
    def length(self) -> int:
        """Highest exponent index L stored in the table."""
        return len(self.entries) - 1


@dataclass(slots=True)
class OpCounter:
    """
    Tallies of modular multiplications and table lookups.

    Multiplications are charged to ``mul_init`` until ``enter_loop`` is
    called, and to ``mul_loop`` afterwards.
    """

    mul_init: int = 0
    mul_loop: int = 0
    lookups: int = 0
    phase: Phase = "init"

    @property
    def mul_total(self) -> int:
        return self.mul_init + self.mul_loop

    def charge_mul(self, count: int = 1) -> None:
        if self.phase == "init":
            self.mul_init += count
        else:
            self.mul_loop += count

    def charge_lookup(self, count: int = 1) -> None:
        self.lookups += count

    def enter_loop(self) -> None:
        self.phase = "loop"

    def merge(self, other: "OpCounter") -> None:
        """Add another counter's tallies into this one."""
        self.mul_init += other.mul_init
        self.mul_loop += other.mul_loop
        self.lookups += other.lookups

    def snapshot(self) -> "OpCounter":
        return replace(self)


@dataclass(frozen=True, slots=True)
class SqrtOutcome:
    """Result of one square root computation and what it cost."""

    root: Residue
    counter: OpCounter
    loop_iterations: int
    m_sequence: tuple[int, ...] = ()
    rounds: Optional[int] = None
    critical_path: Optional[int] = None
    z_table_builds: int = 0
    b_table_builds: int = 0
    algorithm: str = field(default="v1", compare=False)


def canonical_root(x: Residue, p: int) -> Residue:
    """Smaller representative of the pair {x, p - x}."""
    return min(x, (p - x) % p)


def mul(a: Residue, b: Residue, ctx: PrimeContext, ctr: OpCounter) -> Residue:
    """Return a*b mod p and charge one multiplication.

    Python integers give the double-width intermediate product for free, so
    every p < 2^63 is safe.
    """
    ctr.charge_mul()
    return (a * b) % ctx.p


def pow_mod(a: Residue, e: int, ctx: PrimeContext, ctr: OpCounter) -> Residue:
    """
    Left-to-right binary exponentiation a^e mod p.

    Charges one squaring per bit below the leading one plus one multiply per
    set bit below it: at most 2*floor(log2 e), and nothing for e in {0, 1}.
    """
    if e < 0:
        raise ValueError(f"exponent must be nonnegative, got {e}")
    if e == 0:
        return 1 % ctx.p
    result = a % ctx.p
    for bit in bin(e)[3:]:
        result = mul(result, result, ctx, ctr)
        if bit == "1":
            result = mul(result, a, ctx, ctr)
    return result


def decompose(p: int) -> tuple[int, int]:
    """Split p - 1 into 2^n * q with q odd."""
    if p < 3 or p % 2 == 0:
        raise UnsupportedModulus(p)
    m = p - 1
    n = (m & -m).bit_length() - 1
    return n, m >> n


def euler_is_qr(a: Residue, ctx: PrimeContext) -> bool:
    """Euler's criterion; 0 is reported as a nonresidue."""
    a %= ctx.p
    if a == 0:
        return False
    return pow(a, (ctx.p - 1) // 2, ctx.p) == 1


def build_context(p: int) -> PrimeContext:
    """
    Build the prime context for p.

    The nonresidue is the smallest u >= 2 with u^((p-1)/2) = -1, which keeps
    operation counts reproducible.

    Raises:
        UnsupportedModulus: p even or below 3
        ModulusTooLarge: p >= 2^63
        CompositeModulus: p fails the deterministic primality check
    """
    n, q = decompose(p)
    if p >= MAX_MODULUS:
        raise ModulusTooLarge(p, MAX_MODULUS)
    if not is_prime_deterministic(p):
        raise CompositeModulus(p)

    half = (p - 1) // 2
    u = 2
    while pow(u, half, p) != p - 1:
        u += 1
    ctx = PrimeContext(p=p, n=n, q=q, u=u, z0=pow(u, q, p))
    logger.debug(f"Context for p={p}: n={n}, q={q}, u={u}, z0={ctx.z0}")
    return ctx


def build_power_table(
    base: Residue, length: int, ctx: PrimeContext, ctr: OpCounter
) -> PowerTable:
    """Tabulate base^(2^j) for 0 <= j <= length with exactly ``length`` squarings."""
    if length < 0:
        raise ValueError(f"table length must be nonnegative, got {length}")
    entries = [base % ctx.p]
    for _ in range(length):
        entries.append(mul(entries[-1], entries[-1], ctx, ctr))
    return PowerTable(base=entries[0], entries=tuple(entries))


def table_lookup(table: PowerTable, j: int, ctr: OpCounter) -> Residue:
    """Return base^(2^j) from the table and charge one lookup."""
    if j < 0 or j > table.length:
        raise IndexOutOfRange(j, len(table.entries))
    ctr.charge_lookup()
    return table.entries[j]


# Debug-mode checks. They use uncounted arithmetic so enabling them never
# changes the reported operation counts.


def check_square_relation(
    x: Residue, a: Residue, b: Residue, ctx: PrimeContext, where: str
) -> None:
    """Raise unless x^2 = a*b (mod p)."""
    if (x * x - a * b) % ctx.p != 0:
        raise InvariantViolation(where, f"x={x}, a={a}, b={b}, p={ctx.p}")


def check_exact_order(value: Residue, k: int, ctx: PrimeContext, where: str) -> None:
    """Raise unless value has multiplicative order exactly 2^k."""
    p = ctx.p
    reaches_one = pow(value, 1 << k, p) == 1
    earlier = k > 0 and pow(value, 1 << (k - 1), p) == 1
    if not reaches_one or earlier:
        raise InvariantViolation(where, f"order of {value} is not 2^{k} mod {p}")


def check_order_below(value: Residue, k: int, ctx: PrimeContext, where: str) -> None:
    """Raise unless the order of value divides 2^(k-1)."""
    if k < 1 or pow(value, 1 << (k - 1), ctx.p) != 1:
        raise InvariantViolation(where, f"order of {value} is not below 2^{k}")
