"""
Benchmark harness.

Sweeps Proth primes q*2^n + 1, runs the selected variants over random
quadratic residues and aggregates their operation counts into CSV records.
"""

import csv
import io
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable, Literal, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator
from pydantic_core import from_json

from sqrtmod.algorithms import solve
from sqrtmod.algorithms.field_core import PrimeContext, build_context
from sqrtmod.algorithms.oracle import is_prime_deterministic, lindhurst_expected
from sqrtmod.core import (
    ALGORITHM_TAGS,
    CSV_HEADER,
    DEFAULT_Q_MAX,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    MAX_MODULUS,
    MODE_SEQUENTIAL,
)

logger = logging.getLogger(__name__)

AlgorithmTag = Literal["v1", "v2", "v3"]
ExecutionMode = Literal["sequential-simulated", "concurrent"]


class BenchConfig(BaseModel):
    """Validated sweep configuration, from CLI flags or a JSON file."""

    primes: list[int] = Field(default_factory=list)
    n_list: list[int] = Field(default_factory=list)
    q_max: int = Field(default=DEFAULT_Q_MAX, ge=1)
    samples_per_prime: int = Field(default=DEFAULT_SAMPLES, ge=1)
    seed: int = Field(default=DEFAULT_SEED, ge=0)
    algorithms: list[AlgorithmTag] = Field(
        default_factory=lambda: list(ALGORITHM_TAGS)
    )
    mode: ExecutionMode = MODE_SEQUENTIAL
    jobs: int = Field(default=1, ge=1)

    @field_validator("primes")
    @classmethod
    def primes_are_usable(cls, primes: list[int]) -> list[int]:
        for p in primes:
            if p < 3 or p >= MAX_MODULUS or not is_prime_deterministic(p):
                raise ValueError(f"{p} is not an odd prime below 2^63")
        return primes

    @field_validator("n_list")
    @classmethod
    def exponents_positive(cls, n_list: list[int]) -> list[int]:
        for n in n_list:
            if not 1 <= n < 63:
                raise ValueError(f"n must lie in [1, 62], got {n}")
        return n_list

    @field_validator("q_max")
    @classmethod
    def q_max_odd(cls, q_max: int) -> int:
        if q_max % 2 == 0:
            raise ValueError(f"q_max must be odd, got {q_max}")
        return q_max

    @field_validator("algorithms")
    @classmethod
    def algorithms_nonempty(cls, algorithms: list[str]) -> list[str]:
        if not algorithms:
            raise ValueError("at least one algorithm is required")
        return list(dict.fromkeys(algorithms))

    @model_validator(mode="after")
    def has_primes(self) -> "BenchConfig":
        if not self.primes and not self.n_list:
            raise ValueError("either primes or n_list must be given")
        return self

    @staticmethod
    def read_file(path: Path) -> dict[str, Any]:
        """
        Raw fields of a JSON config file, not yet validated.

        Raises:
            ValueError: malformed JSON (with line and column) or a non-object
        """
        data = from_json(path.read_bytes())
        if not isinstance(data, dict):
            raise ValueError(f"{path}: expected a JSON object of config fields")
        return data

    @classmethod
    def from_file(cls, path: Path) -> "BenchConfig":
        return cls.model_validate(cls.read_file(path))


@dataclass(frozen=True, slots=True)
class BenchRecord:
    """Aggregated counts of one (prime, algorithm) cell."""

    p: int
    n: int
    q: int
    algorithm: str
    samples: int
    mean_mul_loop: float
    mean_mul_total: float
    mean_lookups: float
    mean_rounds: Optional[float]
    max_loop_iterations: int


@dataclass(frozen=True, slots=True)
class ComplexityReport:
    """Empirical exponents and ratios over a sweep."""

    slopes: dict[str, float]
    ratio_v2_v1: dict[int, float]
    ratio_strictly_decreasing: bool
    lindhurst_deviation: dict[int, float]


def smallest_proth_prime(n: int, q_max: int) -> Optional[int]:
    """Prime q*2^n + 1 with the smallest odd q <= q_max, if one fits in 63 bits."""
    for q in range(1, q_max + 1, 2):
        p = (q << n) + 1
        if p >= MAX_MODULUS:
            return None
        if is_prime_deterministic(p):
            return p
    return None


def generate_proth_primes(n_list: Iterable[int], q_max: int) -> list[int]:
    """For each n, the smallest admissible Proth prime; n without one is skipped."""
    primes = []
    for n in n_list:
        p = smallest_proth_prime(n, q_max)
        if p is None:
            logger.warning(f"No prime q*2^{n}+1 with odd q <= {q_max}; skipping n={n}")
            continue
        logger.debug(f"n={n}: p={p}")
        primes.append(p)
    return primes


def cell_rng(seed: int, p: int, algorithm: str) -> np.random.Generator:
    """PCG64 stream for one cell, derived from the global seed, p and the tag."""
    entropy = [seed, p, ALGORITHM_TAGS.index(algorithm)]
    return np.random.default_rng(np.random.SeedSequence(entropy))


def run_cell(ctx: PrimeContext, algorithm: str, cfg: BenchConfig) -> BenchRecord:
    """Run one variant over samples_per_prime residues r^2 mod p."""
    rng = cell_rng(cfg.seed, ctx.p, algorithm)
    draws = rng.integers(1, ctx.p, size=cfg.samples_per_prime, dtype=np.int64)

    mul_loop, mul_total, lookups, rounds = [], [], [], []
    max_iters = 0
    for r in draws.tolist():
        a = r * r % ctx.p
        outcome = solve(algorithm, a, ctx, mode=cfg.mode)
        if outcome.root * outcome.root % ctx.p != a:
            raise RuntimeError(
                f"{algorithm} returned {outcome.root} for a={a} (r={r}) mod {ctx.p}"
            )
        mul_loop.append(outcome.counter.mul_loop)
        mul_total.append(outcome.counter.mul_total)
        lookups.append(outcome.counter.lookups)
        if outcome.rounds is not None:
            rounds.append(outcome.rounds)
        max_iters = max(max_iters, outcome.loop_iterations)

    record = BenchRecord(
        p=ctx.p,
        n=ctx.n,
        q=ctx.q,
        algorithm=algorithm,
        samples=cfg.samples_per_prime,
        mean_mul_loop=float(np.mean(mul_loop)),
        mean_mul_total=float(np.mean(mul_total)),
        mean_lookups=float(np.mean(lookups)),
        mean_rounds=float(np.mean(rounds)) if rounds else None,
        max_loop_iterations=max_iters,
    )
    logger.info(
        f"p={ctx.p} (n={ctx.n}) {algorithm}: mean loop muls "
        f"{record.mean_mul_loop:.2f}, max iterations {max_iters}"
    )
    return record


def run_sweep(cfg: BenchConfig) -> list[BenchRecord]:
    """
    Run every (prime, algorithm) cell of the configuration.

    Deterministic given the seed: each cell draws from its own stream and
    results are collected in cell order whatever the number of jobs.
    """
    generated = generate_proth_primes(cfg.n_list, cfg.q_max)
    primes = list(dict.fromkeys([*cfg.primes, *generated]))
    contexts = [build_context(p) for p in primes]
    cells = [(ctx, alg) for ctx in contexts for alg in cfg.algorithms]
    logger.info(
        f"Sweeping {len(primes)} primes x {len(cfg.algorithms)} algorithms, "
        f"{cfg.samples_per_prime} samples each"
    )

    if cfg.jobs == 1:
        return [run_cell(ctx, alg, cfg) for ctx, alg in cells]
    with ThreadPoolExecutor(max_workers=cfg.jobs) as executor:
        return list(executor.map(lambda cell: run_cell(*cell, cfg), cells))


def _fmt(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.6f}"


def emit_csv(records: Iterable[BenchRecord]) -> str:
    """Render records under the fixed header; means with 6 decimals."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(
            [
                r.p,
                r.n,
                r.q,
                r.algorithm,
                r.samples,
                _fmt(r.mean_mul_loop),
                _fmt(r.mean_mul_total),
                _fmt(r.mean_lookups),
                _fmt(r.mean_rounds),
                r.max_loop_iterations,
            ]
        )
    return buffer.getvalue()


def parse_csv(text: str) -> list[BenchRecord]:
    """
    Inverse of emit_csv.

    Means are written with six decimals, so the round trip is exact only for
    values that six decimals represent; other means come back rounded.
    """
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    return [
        BenchRecord(
            p=int(row["p"]),
            n=int(row["n"]),
            q=int(row["q"]),
            algorithm=row["algorithm"],
            samples=int(row["samples"]),
            mean_mul_loop=float(row["mean_mul_loop"]),
            mean_mul_total=float(row["mean_mul_total"]),
            mean_lookups=float(row["mean_lookups"]),
            mean_rounds=float(row["mean_rounds"]) if row["mean_rounds"] else None,
            max_loop_iterations=int(row["max_loop_iterations"]),
        )
        for row in reader
    ]


def loglog_slope(ns: Sequence[float], values: Sequence[float]) -> float:
    """Least-squares slope of log(values) against log(ns)."""
    if len(ns) < 2:
        raise ValueError("at least two points are needed for a slope")
    slope, _ = np.polyfit(np.log(np.asarray(ns, dtype=float)), np.log(values), 1)
    return float(slope)


def complexity_report(records: Sequence[BenchRecord]) -> ComplexityReport:
    """Empirical exponents of mean loop cost and the v2/v1 ratio across n."""
    by_alg: dict[str, dict[int, float]] = {}
    for r in records:
        if r.mean_mul_loop > 0:
            by_alg.setdefault(r.algorithm, {})[r.n] = r.mean_mul_loop

    slopes = {}
    for alg, series in sorted(by_alg.items()):
        if len(series) >= 2:
            ns = sorted(series)
            slopes[alg] = loglog_slope(ns, [series[n] for n in ns])

    v1 = by_alg.get("v1", {})
    v2 = by_alg.get("v2", {})
    ratio = {n: v2[n] / v1[n] for n in sorted(set(v1) & set(v2))}
    values = list(ratio.values())
    decreasing = len(values) >= 2 and all(x > y for x, y in zip(values, values[1:]))

    deviation = {
        n: mean / float(lindhurst_expected(n)) - 1.0
        for n, mean in sorted(v1.items())
        if lindhurst_expected(n) > 0
    }
    return ComplexityReport(
        slopes=slopes,
        ratio_v2_v1=ratio,
        ratio_strictly_decreasing=decreasing,
        lindhurst_deviation=deviation,
    )
