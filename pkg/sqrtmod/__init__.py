"""
Modular Square Roots Package

Shanks' square-root algorithm modulo p = 2^n*q + 1 in three variants
(classic loop, tabulated powers, fork-join parallel refresh), with
operation-count instrumentation and a benchmark harness.
"""

__version__ = "1.0.0"
__description__ = "Instrumented Shanks square roots modulo Proth-style primes"
