#!/usr/bin/env python3
"""
Code Quality Script

Runs the lint, format and test checks for the project:
- ruff (linting and formatting)
- black (format check)
- pytest (fast suite; add --slow for the exhaustive and statistical tests)

With --fix, applies ruff and black fixes instead of only checking.
"""

import os
import subprocess
import sys
from pathlib import Path

import click


def run_command(command: list[str], description: str) -> bool:
    """Run a command and return success status."""
    print(f"\n{'=' * 50}")
    print(f"Running: {description}")
    print(f"Command: {' '.join(command)}")
    print("=" * 50)

    try:
        result = subprocess.run(command, check=True, capture_output=True, text=True)
        print("✅ SUCCESS")
        if result.stdout:
            print(result.stdout)
        return True
    except subprocess.CalledProcessError as e:
        print("❌ FAILED")
        print(f"Error: {e}")
        if e.stdout:
            print("STDOUT:", e.stdout)
        if e.stderr:
            print("STDERR:", e.stderr)
        return False


@click.command()
@click.option("--fix", is_flag=True, help="Apply ruff and black fixes.")
@click.option("--slow", is_flag=True, help="Include tests marked slow.")
def main(fix: bool, slow: bool) -> None:
    """Run all code quality checks."""
    print("🧹 Starting code checks...")

    project_root = Path(__file__).parent.parent
    os.chdir(project_root)

    if fix:
        steps = [
            (["ruff", "check", "--fix", "."], "Ruff Auto-fix"),
            (["ruff", "check", "--select", "I", "--fix", "."], "Import Sorting"),
            (["black", "."], "Black Formatting"),
        ]
    else:
        steps = [
            (["ruff", "check", "."], "Ruff Linting"),
            (["black", "--check", "."], "Black Format Check"),
        ]
    pytest_args = ["pytest"] if slow else ["pytest", "-m", "not slow"]
    steps.append((pytest_args, "Pytest Tests"))

    failed = [desc for command, desc in steps if not run_command(command, desc)]

    print(f"\n{'=' * 50}")
    print("📊 SUMMARY")
    print("=" * 50)

    if failed:
        print("❌ Failed steps:")
        for desc in failed:
            print(f"  - {desc}")
        print(f"\nTotal: {len(failed)} failed, {len(steps) - len(failed)} passed")
        sys.exit(1)

    print(f"✅ All {len(steps)} steps passed!")


if __name__ == "__main__":
    main()
