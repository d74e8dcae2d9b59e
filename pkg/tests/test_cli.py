"""
Tests for the command-line interface.
"""

import json

import pytest
from click.testing import CliRunner

from sqrtmod.cli import cli, main
from sqrtmod.core import CSV_HEADER


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


class TestSqrtCommand:
    """Test the sqrt subcommand."""

    def test_canonical_root(self, runner):
        """Test sqrt -p 13 -a 10 --canonical prints 6."""
        result = runner.invoke(cli, ["sqrt", "-p", "13", "-a", "10", "--canonical"])
        assert result.exit_code == 0
        assert result.stdout == "6\n"

    @pytest.mark.parametrize("algorithm", ["v1", "v2", "v3"])
    def test_all_variants_in_root_set(self, runner, algorithm):
        """Test that every variant prints a root of 10 mod 13."""
        result = runner.invoke(
            cli, ["sqrt", "-p", "13", "-a", "10", "--algorithm", algorithm]
        )
        assert result.exit_code == 0
        assert int(result.stdout) in (6, 7)

    def test_nonresidue_exit_code(self, runner):
        """Test that 5 mod 13 exits with 3."""
        result = runner.invoke(cli, ["sqrt", "-p", "13", "-a", "5"])
        assert result.exit_code == 3
        assert result.stdout == ""

    @pytest.mark.parametrize("p", ["15", "2", "16", "9223372036854775837"])
    def test_bad_modulus_exit_code(self, runner, p):
        """Test composite, even and oversized moduli exit with 2."""
        result = runner.invoke(cli, ["sqrt", "-p", p, "-a", "4"])
        assert result.exit_code == 2

    @pytest.mark.parametrize(
        "args",
        [
            ["sqrt", "-p", "0x0d", "-a", "10"],
            ["sqrt", "-p", "13", "-a", "1e3"],
            ["sqrt", "-p", "13"],
            ["sqrt", "-p", "13", "-a", "10", "--algorithm", "v9"],
            ["frobnicate"],
        ],
    )
    def test_malformed_input_exit_code(self, runner, args):
        """Test non-decimal, missing and unknown arguments exit with 1."""
        assert runner.invoke(cli, args).exit_code == 1

    def test_stats(self, runner):
        """Test the key=value statistics lines for v3."""
        result = runner.invoke(
            cli, ["sqrt", "-p", "17", "-a", "2", "-A", "v3", "--stats", "--canonical"]
        )
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "6"
        stats = dict(line.split("=", 1) for line in lines[1:])
        assert list(stats) == [
            "mul_init",
            "mul_loop",
            "lookups",
            "rounds",
            "loop_iterations",
        ]
        assert stats["rounds"] == "1"
        assert stats["loop_iterations"] == "1"

    def test_stats_rounds_empty_for_v1(self, runner):
        """Test that rounds is blank for the sequential variants."""
        result = runner.invoke(cli, ["sqrt", "-p", "13", "-a", "10", "--stats"])
        assert "rounds=\n" in result.stdout

    def test_concurrent_mode(self, runner):
        """Test the v3 thread-pool mode from the command line."""
        result = runner.invoke(
            cli,
            ["sqrt", "-p", "998244353", "-a", "4", "-A", "v3", "--mode", "concurrent"],
        )
        assert result.exit_code == 0
        assert int(result.stdout) in (2, 998244351)


class TestCheckCommand:
    """Test the check subcommand."""

    @pytest.mark.parametrize(
        "p, a, x, code, text",
        [
            ("13", "10", "7", 0, "OK"),
            ("13", "10", "5", 1, "FAIL"),
            ("7", "0", "0", 0, "OK"),
        ],
    )
    def test_examples(self, runner, p, a, x, code, text):
        """Test OK and FAIL verdicts with their exit codes."""
        result = runner.invoke(cli, ["check", "-p", p, "-a", a, "-x", x])
        assert result.exit_code == code
        assert result.stdout.strip() == text

    def test_malformed(self, runner):
        """Test a non-decimal root and a zero modulus exit with 1."""
        non_decimal = runner.invoke(cli, ["check", "-p", "13", "-a", "10", "-x", "7.0"])
        zero_modulus = runner.invoke(cli, ["check", "-p", "0", "-a", "1", "-x", "1"])
        assert non_decimal.exit_code == 1
        assert zero_modulus.exit_code == 1


class TestBenchCommand:
    """Test the bench subcommand."""

    ARGS = ["bench", "--n", "16,23,30", "--samples", "100", "--seed", "7"]

    def test_nine_rows(self, runner):
        """Test three primes times three algorithms give nine data rows."""
        result = runner.invoke(cli, [*self.ARGS, "--algos", "v1,v2,v3"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == ",".join(CSV_HEADER)
        assert len(lines) == 10

    def test_reruns_byte_identical(self, runner):
        """Test that a fixed seed reproduces the CSV exactly."""
        first = runner.invoke(cli, [*self.ARGS, "--algos", "v1,v3"])
        second = runner.invoke(cli, [*self.ARGS, "--algos", "v1,v3"])
        assert first.stdout_bytes == second.stdout_bytes

    @pytest.mark.parametrize(
        "args",
        [
            ["bench", "--samples", "0"],
            ["bench", "--n", "16", "--algos", "v1,v7"],
            ["bench", "--primes", "15"],
            ["bench", "--n", "16", "--q-max", "10"],
        ],
    )
    def test_config_errors(self, runner, args):
        """Test invalid configurations exit with 1."""
        assert runner.invoke(cli, args).exit_code == 1

    def test_config_error_names_field(self, runner):
        """Test that the diagnostic names the offending field."""
        result = runner.invoke(cli, ["bench", "--samples", "0"])
        assert "samples_per_prime" in result.stderr

    def test_output_file_and_config(self, runner, tmp_path):
        """Test reading a JSON config and writing the CSV to a file."""
        config = tmp_path / "bench.json"
        config.write_text(json.dumps({"primes": [13, 17], "samples_per_prime": 4}))
        output = tmp_path / "out" / "bench.csv"
        result = runner.invoke(
            cli,
            ["bench", "--config", str(config), "--algos", "v2", "-o", str(output)],
        )
        assert result.exit_code == 0
        assert result.stdout == ""
        rows = output.read_text().splitlines()
        assert [row.split(",")[0] for row in rows[1:]] == ["13", "17"]
        assert all(row.split(",")[3] == "v2" for row in rows[1:])

    def test_flags_complete_partial_config(self, runner, tmp_path):
        """Test that --n supplies the primes a config file leaves out."""
        config = tmp_path / "bench.json"
        config.write_text(json.dumps({"samples_per_prime": 2, "seed": 3}))
        result = runner.invoke(
            cli, ["bench", "--config", str(config), "--n", "16", "--algos", "v1"]
        )
        assert result.exit_code == 0
        rows = result.stdout.splitlines()[1:]
        assert [row.split(",")[:5] for row in rows] == [
            ["65537", "16", "1", "v1", "2"]
        ]

    def test_partial_config_uses_default_exponents(self, runner, tmp_path):
        """Test the default n list applies when neither file nor flags name primes."""
        config = tmp_path / "bench.json"
        config.write_text(json.dumps({"samples_per_prime": 2, "algorithms": ["v1"]}))
        result = runner.invoke(cli, ["bench", "--config", str(config)])
        assert result.exit_code == 0
        rows = result.stdout.splitlines()[1:]
        assert [row.split(",")[1] for row in rows] == ["16", "23", "30"]

    def test_malformed_config_file(self, runner, tmp_path):
        """Test that broken JSON exits with 1 and a diagnostic."""
        config = tmp_path / "bench.json"
        config.write_text('{"samples_per_prime": 2,')
        result = runner.invoke(cli, ["bench", "--config", str(config)])
        assert result.exit_code == 1
        assert "config error" in result.stderr


class TestMain:
    """Test the programmatic entry point."""

    def test_returns_exit_codes(self):
        """Test main() returns the exit code instead of exiting."""
        assert main(["sqrt", "-p", "13", "-a", "10"]) == 0
        assert main(["sqrt", "-p", "13", "-a", "5"]) == 3
        assert main(["sqrt", "-p", "15", "-a", "4"]) == 2
        assert main(["sqrt", "-p", "abc", "-a", "4"]) == 1
