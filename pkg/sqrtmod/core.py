"""Core configuration and constants for the modular square root toolkit."""

import os
from pathlib import Path

# Base directory configuration
BASE_DIR = Path(__file__).resolve().parent.parent
RESULTS_DIR = BASE_DIR / "results"

# Application settings
APP_NAME = "Modular Square Roots"
APP_VERSION = "1.0.0"
APP_DESCRIPTION = "Shanks square roots modulo p = 2^n*q + 1 with operation counts"

# Arithmetic limits
MAX_MODULUS_BITS = 63  # product of two residues stays within 126 bits
MAX_MODULUS = 1 << MAX_MODULUS_BITS
EXHAUSTIVE_BOUND = 10**6  # largest modulus the brute-force oracle will scan

# Deterministic Miller-Rabin witnesses, exact for every n < 3.3e24
PRIMALITY_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Algorithm variants
ALGORITHM_TAGS = ("v1", "v2", "v3")
MODE_SEQUENTIAL = "sequential-simulated"
MODE_CONCURRENT = "concurrent"
EXECUTION_MODES = (MODE_SEQUENTIAL, MODE_CONCURRENT)

# Benchmark defaults
DEFAULT_SEED = 7
DEFAULT_SAMPLES = 100
DEFAULT_N_LIST = (16, 23, 30)
DEFAULT_Q_MAX = 9999
CSV_HEADER = (
    "p",
    "n",
    "q",
    "algorithm",
    "samples",
    "mean_mul_loop",
    "mean_mul_total",
    "mean_lookups",
    "mean_rounds",
    "max_loop_iterations",
)

# CLI exit codes
EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_BAD_MODULUS = 2
EXIT_NOT_RESIDUE = 3

# Environment overrides
CHECK_INVARIANTS = os.getenv("SQRTMOD_CHECK_INVARIANTS", "0").lower() in (
    "1",
    "true",
    "yes",
    "on",
)
LOG_LEVEL = os.getenv("SQRTMOD_LOG_LEVEL", "WARNING").upper()
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
