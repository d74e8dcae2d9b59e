#!/usr/bin/env python3
"""
Experiment Script

Runs the two reference sweeps and writes their CSV into results/:
- lindhurst.csv: v1 at n = 30 over 10^4 residues, compared to Lindhurst's average
- complexity.csv: v1, v2 and v3 over n = 16, 24, 32, 40, 48

Prints the empirical exponents, the v2/v1 ratio and the deviation from
Lindhurst's formula.
"""

import logging
import sys
import time

import click

from sqrtmod.algorithms.oracle import lindhurst_expected
from sqrtmod.bench import BenchConfig, complexity_report, emit_csv, run_sweep
from sqrtmod.core import LOG_FORMAT, RESULTS_DIR

logging.basicConfig(level=logging.INFO, format=LOG_FORMAT)
logger = logging.getLogger(__name__)

COMPLEXITY_N = [16, 24, 32, 40, 48]


def write_csv(name: str, cfg: BenchConfig) -> list:
    """Run a sweep and store its CSV under RESULTS_DIR."""
    start = time.perf_counter()
    records = run_sweep(cfg)
    path = RESULTS_DIR / name
    path.write_text(emit_csv(records), encoding="utf-8")
    logger.info(
        f"{name}: {len(records)} records in {time.perf_counter() - start:.1f}s"
    )
    return records


@click.command()
@click.option("--samples", default=1000, show_default=True, help="Samples per prime.")
@click.option("--seed", default=7, show_default=True)
@click.option("--jobs", default=4, show_default=True, help="Concurrent sweep cells.")
def main(samples: int, seed: int, jobs: int) -> None:
    """Run the reference sweeps."""
    print("🧪 Starting experiments...")
    RESULTS_DIR.mkdir(parents=True, exist_ok=True)

    lindhurst = write_csv(
        "lindhurst.csv",
        BenchConfig(
            n_list=[30], samples_per_prime=10_000, seed=seed, algorithms=["v1"]
        ),
    )
    (record,) = lindhurst
    expected = float(lindhurst_expected(30))
    deviation = record.mean_mul_loop / expected - 1.0
    print(
        f"📐 n=30: mean loop muls {record.mean_mul_loop:.2f}, "
        f"Lindhurst {expected:.2f} ({deviation:+.2%})"
    )

    records = write_csv(
        "complexity.csv",
        BenchConfig(
            n_list=COMPLEXITY_N, samples_per_prime=samples, seed=seed, jobs=jobs
        ),
    )
    report = complexity_report(records)

    print(f"\n{'=' * 50}")
    print("📊 SUMMARY")
    print("=" * 50)
    for alg, slope in report.slopes.items():
        print(f"  {alg}: log-log slope {slope:.3f}")
    for n, ratio in report.ratio_v2_v1.items():
        print(f"  n={n}: v2/v1 = {ratio:.3f}")

    v1_ok = 1.7 <= report.slopes.get("v1", 0.0) <= 2.3
    v2_ok = 1.2 <= report.slopes.get("v2", 0.0) <= 1.8
    lindhurst_ok = abs(deviation) <= 0.1
    if v1_ok and v2_ok and report.ratio_strictly_decreasing and lindhurst_ok:
        print("✅ Exponents, ratio and Lindhurst average within bounds")
        return
    print("❌ Experiment outside expected bounds")
    sys.exit(1)


if __name__ == "__main__":
    main()
