"""
Command-line interface for modular square roots.

Subcommands:
    sqrt   compute a square root with one of the three variants
    bench  run a seeded benchmark sweep and write CSV
    check  verify x^2 = a (mod p)

Exit codes: 0 success, 1 malformed input or failed check, 2 unusable
modulus, 3 nonresidue.
"""

import logging
import re
import sys
from pathlib import Path
from typing import Any, Optional

import click
from pydantic import ValidationError

from sqrtmod import __version__
from sqrtmod.algorithms import solve
from sqrtmod.algorithms.field_core import build_context, canonical_root
from sqrtmod.bench import BenchConfig, complexity_report, emit_csv, run_sweep
from sqrtmod.core import (
    ALGORITHM_TAGS,
    DEFAULT_N_LIST,
    EXECUTION_MODES,
    EXIT_BAD_MODULUS,
    EXIT_MALFORMED,
    EXIT_NOT_RESIDUE,
    EXIT_OK,
    LOG_FORMAT,
    LOG_LEVEL,
    MODE_SEQUENTIAL,
)
from sqrtmod.errors import ModulusError, NotAResidue

logger = logging.getLogger(__name__)


class DecimalInt(click.ParamType):
    """Base-10 integer literal: optional sign and digits only."""

    name = "integer"
    _pattern = re.compile(r"[+-]?[0-9]+")

    def convert(self, value: Any, param, ctx) -> int:
        if isinstance(value, int):
            return value
        text = str(value).strip()
        if not self._pattern.fullmatch(text):
            self.fail(f"{value!r} is not a decimal integer", param, ctx)
        return int(text)


class IntList(click.ParamType):
    """Comma-separated decimal integers."""

    name = "list"

    def convert(self, value: Any, param, ctx) -> list[int]:
        if isinstance(value, list):
            return value
        items = [item for item in str(value).split(",") if item.strip()]
        return [DECIMAL.convert(item, param, ctx) for item in items]


class TagList(click.ParamType):
    """Comma-separated algorithm tags."""

    name = "algos"

    def convert(self, value: Any, param, ctx) -> list[str]:
        if isinstance(value, list):
            return value
        tags = [tag.strip() for tag in str(value).split(",") if tag.strip()]
        unknown = [tag for tag in tags if tag not in ALGORITHM_TAGS]
        if unknown:
            self.fail(f"unknown algorithm(s) {', '.join(unknown)}", param, ctx)
        return tags


DECIMAL = DecimalInt()


class SqrtModGroup(click.Group):
    """Group whose usage errors exit with 1 instead of click's default 2."""

    def main(self, *args, standalone_mode: bool = True, **kwargs):
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
            code = rv if isinstance(rv, int) else EXIT_OK
        except click.ClickException as e:
            e.show()
            code = EXIT_MALFORMED
        except click.Abort:
            click.echo("Aborted!", err=True)
            code = EXIT_MALFORMED
        if standalone_mode:
            sys.exit(code)
        return code


@click.group(cls=SqrtModGroup)
@click.version_option(__version__, prog_name="sqrtmod")
@click.option(
    "--log-level",
    default=LOG_LEVEL,
    show_default=True,
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    help="Logging level for diagnostics on stderr.",
)
def cli(log_level: str) -> None:
    """Square roots modulo p = 2^n*q + 1 with Shanks' algorithm and two variants."""
    logging.basicConfig(level=log_level.upper(), format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger("sqrtmod").setLevel(log_level.upper())


@cli.command("sqrt")
@click.option("-p", "p", type=DECIMAL, required=True, help="Odd prime modulus.")
@click.option("-a", "a", type=DECIMAL, required=True, help="Quadratic residue.")
@click.option(
    "--algorithm",
    "-A",
    type=click.Choice(ALGORITHM_TAGS),
    default="v1",
    show_default=True,
)
@click.option("--canonical", is_flag=True, help="Print min(x, p - x).")
@click.option("--stats", is_flag=True, help="Print operation counts as key=value.")
@click.option(
    "--mode",
    type=click.Choice(EXECUTION_MODES),
    default=MODE_SEQUENTIAL,
    show_default=True,
    help="Execution mode of the v3 refresh rounds.",
)
@click.pass_context
def cmd_sqrt(
    ctx: click.Context,
    p: int,
    a: int,
    algorithm: str,
    canonical: bool,
    stats: bool,
    mode: str,
) -> None:
    """Compute x with x^2 = a (mod p)."""
    try:
        context = build_context(p)
        outcome = solve(algorithm, a, context, mode=mode)
    except ModulusError as e:
        logger.warning(f"Rejected modulus: {e}")
        click.echo(f"error: {e}", err=True)
        ctx.exit(EXIT_BAD_MODULUS)
    except NotAResidue as e:
        logger.warning(f"No square root: {e}")
        click.echo(f"error: {e}", err=True)
        ctx.exit(EXIT_NOT_RESIDUE)

    root = canonical_root(outcome.root, p) if canonical else outcome.root
    click.echo(root)
    if stats:
        counter = outcome.counter
        rounds = "" if outcome.rounds is None else outcome.rounds
        click.echo(f"mul_init={counter.mul_init}")
        click.echo(f"mul_loop={counter.mul_loop}")
        click.echo(f"lookups={counter.lookups}")
        click.echo(f"rounds={rounds}")
        click.echo(f"loop_iterations={outcome.loop_iterations}")


@cli.command("check")
@click.option("-p", "p", type=DECIMAL, required=True, help="Modulus.")
@click.option("-a", "a", type=DECIMAL, required=True, help="Claimed square.")
@click.option("-x", "x", type=DECIMAL, required=True, help="Claimed root.")
@click.pass_context
def cmd_check(ctx: click.Context, p: int, a: int, x: int) -> None:
    """Verify that x^2 = a (mod p)."""
    if p < 1:
        raise click.BadParameter(f"modulus must be positive, got {p}", param_hint="-p")
    if (x * x - a) % p == 0:
        click.echo("OK")
        return
    click.echo("FAIL")
    ctx.exit(EXIT_MALFORMED)


def _bench_config(
    config_path: Optional[Path], overrides: dict[str, Any]
) -> BenchConfig:
    data: dict[str, Any] = {}
    if config_path is not None:
        data = BenchConfig.read_file(config_path)
    data.update({key: value for key, value in overrides.items() if value is not None})
    if not data.get("primes") and not data.get("n_list"):
        data["n_list"] = list(DEFAULT_N_LIST)
    return BenchConfig.model_validate(data)


@cli.command("bench")
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="JSON file with BenchConfig fields; flags override it.",
)
@click.option("--n", "n_list", type=IntList(), help="Exponents n, e.g. 16,23,30.")
@click.option("--primes", type=IntList(), help="Explicit primes, comma-separated.")
@click.option("--q-max", type=DECIMAL, help="Largest odd q tried per n.")
@click.option("--samples", "samples_per_prime", type=DECIMAL, help="Samples per prime.")
@click.option("--seed", type=DECIMAL, help="Global RNG seed.")
@click.option("--algos", "algorithms", type=TagList(), help="Subset of v1,v2,v3.")
@click.option("--mode", type=click.Choice(EXECUTION_MODES), help="v3 execution mode.")
@click.option("--jobs", type=DECIMAL, help="Sweep cells run concurrently.")
@click.option(
    "--output",
    "-o",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Write CSV here instead of stdout.",
)
@click.option("--report", is_flag=True, help="Log empirical exponents and ratios.")
@click.pass_context
def cmd_bench(
    ctx: click.Context,
    config_path: Optional[Path],
    output: Optional[Path],
    report: bool,
    **overrides: Any,
) -> None:
    """Run a benchmark sweep over Proth primes and emit CSV."""
    try:
        cfg = _bench_config(config_path, overrides)
    except ValidationError as e:
        for err in e.errors():
            location = ".".join(str(part) for part in err["loc"]) or "config"
            click.echo(f"config error at {location}: {err['msg']}", err=True)
        ctx.exit(EXIT_MALFORMED)
    except ValueError as e:
        click.echo(f"config error: {e}", err=True)
        ctx.exit(EXIT_MALFORMED)

    records = run_sweep(cfg)
    text = emit_csv(records)
    if output is None:
        click.echo(text, nl=False)
    else:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {len(records)} records to {output}")

    if report:
        summary = complexity_report(records)
        for alg, slope in summary.slopes.items():
            logger.info(f"log-log slope of mean loop muls for {alg}: {slope:.3f}")
        logger.info(
            f"v2/v1 ratio by n: {summary.ratio_v2_v1} "
            f"(strictly decreasing: {summary.ratio_strictly_decreasing})"
        )
        for n, dev in summary.lindhurst_deviation.items():
            logger.info(f"v1 deviation from Lindhurst average at n={n}: {dev:+.2%}")


def main(argv: Optional[list[str]] = None) -> int:
    return cli.main(args=argv, prog_name="sqrtmod", standalone_mode=False)


if __name__ == "__main__":
    sys.exit(main())
