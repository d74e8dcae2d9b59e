"""Entry point for ``python -m sqrtmod``."""

import sys

from sqrtmod.cli import main

if __name__ == "__main__":
    sys.exit(main())
