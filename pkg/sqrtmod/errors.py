"""
Exception hierarchy for the modular square root toolkit.

Library code raises these; the CLI and the HTTP routes translate them into
exit codes and status codes.
"""

from typing import Optional


class SqrtModError(Exception):
    """Base class for every error raised by sqrtmod."""


class ModulusError(SqrtModError, ValueError):
    """The modulus cannot be used by the algorithms."""

    def __init__(self, p: int, message: str):
        super().__init__(message)
        self.p = p


class UnsupportedModulus(ModulusError):
    """Modulus is even or smaller than 3."""

    def __init__(self, p: int):
        super().__init__(p, f"modulus must be an odd integer >= 3, got {p}")


class CompositeModulus(ModulusError):
    """Modulus failed the deterministic primality check."""

    def __init__(self, p: int):
        super().__init__(p, f"modulus {p} is not prime")


class ModulusTooLarge(ModulusError):
    """Modulus exceeds the supported bound."""

    def __init__(self, p: int, bound: int):
        super().__init__(p, f"modulus {p} exceeds the supported bound {bound}")
        self.bound = bound


class NotAResidue(SqrtModError, ValueError):
    """The input has no square root modulo p."""

    def __init__(self, a: int, p: int):
        super().__init__(f"{a} is not a quadratic residue modulo {p}")
        self.a = a
        self.p = p


class OrderExceedsBound(SqrtModError, ArithmeticError):
    """Repeated squaring did not reach 1 within the allowed number of steps."""

    def __init__(self, b: int, k_max: int):
        super().__init__(f"{b} does not reach 1 within {k_max} squarings")
        self.b = b
        self.k_max = k_max


class IndexOutOfRange(SqrtModError, IndexError):
    """Power table index outside [0, L]."""

    def __init__(self, index: int, length: int):
        super().__init__(f"power table index {index} outside [0, {length - 1}]")
        self.index = index
        self.length = length


class InvariantViolation(SqrtModError, AssertionError):
    """A loop invariant failed while invariant checking was enabled."""

    def __init__(self, where: str, detail: Optional[str] = None):
        message = f"invariant violated in {where}"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)
        self.where = where
