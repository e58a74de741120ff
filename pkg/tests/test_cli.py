"""Tests for the command-line interface."""

import csv
import json
from io import StringIO

import click

from src import __version__
from src.errors import UniquenessError
from src.exactalg.cyclotomic import CycLaurent
from src.logging_config import setup_logging
from src.main import EXIT_CAP, EXIT_UNIQUENESS, main, table_command


def envelope(result) -> dict:
    return json.loads(result.stdout)


class TestCLIBasics:
    """Tests for the group, help and version."""

    def test_help(self, runner):
        """Test that --help lists the subcommands."""
        result = runner.invoke(main, ["--help"])
        assert result.exit_code == 0
        for name in ("springer", "green", "verify", "oracle"):
            assert name in result.output

    def test_version(self, runner):
        """Test --version."""
        result = runner.invoke(main, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_bad_partition(self, runner):
        """Test that an unparsable partition is a usage error."""
        result = runner.invoke(main, ["green", "kostka", "--lambda", "2,x", "--mu", "1,1"])
        assert result.exit_code == 2

    def test_bad_log_level(self, runner):
        """Test that an unknown log level is a usage error."""
        args = ["lseries", "irr-count", "--n", "2", "--q", "3", "--log-level", "loud"]
        result = runner.invoke(main, args)
        assert result.exit_code == 2

    def test_log_level_keeps_stdout_clean(self, runner):
        """Test that DEBUG records never reach the emitted table."""
        args = ["lseries", "irr-count", "--n", "2", "--q", "3", "--log-level", "debug"]
        result = runner.invoke(main, args)
        assert result.exit_code == 0
        assert envelope(result)["payload"]["irr_count"] == 7
        setup_logging("WARNING")


class TestTableCommands:
    """Tests for commands that emit tables."""

    def test_springer(self, runner):
        """Test the two blocks of SL_2 in characteristic 3."""
        result = runner.invoke(main, ["springer", "--n", "2", "--p", "3"])
        assert result.exit_code == 0
        data = envelope(result)
        assert data["command"] == "springer"
        assert len(data["payload"]["blocks"]) == 2
        assert data["payload"]["census"]["pairs"] == data["payload"]["census"]["blocks_weighted"]

    def test_kostka(self, runner):
        """Test K_{(2),(1,1)} = t."""
        result = runner.invoke(main, ["green", "kostka", "--lambda", "2", "--mu", "1,1"])
        assert result.exit_code == 0
        assert envelope(result)["payload"]["coefficients"] == [0, 1]

    def test_irr_count(self, runner):
        """Test |Irr SL_2(F_3)| = 7."""
        result = runner.invoke(main, ["lseries", "irr-count", "--n", "2", "--q", "3"])
        assert result.exit_code == 0
        assert envelope(result)["payload"]["irr_count"] == 7

    def test_locate(self, runner):
        """Test x_E = z_E = 1 for the tensor-induced extension on SL_2(F_3)."""
        result = runner.invoke(
            main,
            ["sheaves", "locate", "--n", "2", "--t", "2", "--d", "1", "--q", "3", "--base", "1"],
        )
        assert result.exit_code == 0
        payload = envelope(result)["payload"]
        assert (payload["x_E"], payload["z_E"]) == (1, 1)

    def test_census(self, runner):
        """Test the cuspidal census of SL_2(F_3)."""
        result = runner.invoke(main, ["sheaves", "census", "--n", "2", "--q", "3"])
        assert envelope(result)["payload"]["count"] == 2

    def test_csv_format(self, runner):
        """Test --format csv."""
        result = runner.invoke(
            main, ["lseries", "irr-count", "--n", "2", "--q", "3", "--format", "csv"]
        )
        assert result.exit_code == 0
        rows = list(csv.reader(StringIO(result.stdout)))
        assert rows == [["irr_count", "n", "q"], ["7", "2", "3"]]

    def test_convention_flags(self, runner):
        """Test that --zeta-other is echoed in config and provenance."""
        result = runner.invoke(
            main, ["--zeta-other", "1", "almost", "scalar", "--t", "2", "--q", "3"]
        )
        assert result.exit_code == 0
        data = envelope(result)
        assert data["config"]["zeta_other"] == "1"
        assert data["provenance"]["zeta_other"] == "1"
        assert len(data["payload"]["rows"]) == 4


class TestCommandFilters:
    """Tests for the rank, block and label options of each command."""

    def test_orbits_with_rank(self, runner):
        """Test orbits --n 4 --mu 2,2."""
        result = runner.invoke(main, ["orbits", "--n", "4", "--mu", "2,2"])
        assert result.exit_code == 0
        payload = envelope(result)["payload"]
        assert payload["n"] == 4
        assert payload["mu"] == [2, 2]

    def test_orbits_rank_mismatch(self, runner):
        """Test that mu must partition n."""
        result = runner.invoke(main, ["orbits", "--n", "5", "--mu", "2,2"])
        assert result.exit_code == 1

    def test_springer_block_order(self, runner):
        """Test springer --n 4 --p 3 --d 2."""
        result = runner.invoke(main, ["springer", "--n", "4", "--p", "3", "--d", "2"])
        assert result.exit_code == 0
        found = envelope(result)["payload"]["blocks"]
        assert [entry["block"]["d"] for entry in found] == [2]
        assert len(found[0]["members"]) == 2

    def test_springer_no_such_order(self, runner):
        """Test that a d with no block exits with status 1."""
        result = runner.invoke(main, ["springer", "--n", "4", "--p", "3", "--d", "3"])
        assert result.exit_code == 1

    def test_omega_entry(self, runner):
        """Test green omega for the regular pair of SL_2, which is q^2."""
        args = ["green", "omega", "--n", "2", "--p", "3", "--d", "1"]
        result = runner.invoke(main, args + ["--iota", "2", "--iota2", "2"])
        assert result.exit_code == 0
        payload = envelope(result)["payload"]
        assert payload["iota"] == {"orbit": [2], "tau": 0}
        assert CycLaurent.from_dict(payload["omega"]) == CycLaurent.u_power(4)

    def test_omega_needs_both_labels(self, runner):
        """Test that --iota without --iota2 is a usage error."""
        args = ["green", "omega", "--n", "2", "--p", "3", "--iota", "2"]
        assert runner.invoke(main, args).exit_code == 2

    def test_omega_label_outside_block(self, runner):
        """Test that a pair from another block exits with status 1."""
        args = ["green", "omega", "--n", "2", "--p", "3", "--d", "1"]
        result = runner.invoke(main, args + ["--iota", "2:1", "--iota2", "2"])
        assert result.exit_code == 1

    def test_gggr_regular(self, runner):
        """Test gggr inner --n 2 --p 3 --d 2 --mu 2 --c 0 --regular."""
        args = ["gggr", "inner", "--n", "2", "--p", "3", "--d", "2"]
        result = runner.invoke(main, args + ["--mu", "2", "--c", "0", "--regular"])
        assert result.exit_code == 0
        payload = envelope(result)["payload"]
        assert payload["q"] == 3
        assert payload["rows"]
        assert all(row["block"]["d"] == 2 for row in payload["rows"])

    def test_gggr_needs_field(self, runner):
        """Test that gggr inner without --p or --q is a usage error."""
        result = runner.invoke(main, ["gggr", "inner", "--mu", "2"])
        assert result.exit_code == 2

    def test_almost_matrix_orbit_side(self, runner):
        """Test almost matrix --n 4 --t 2 --mu 2,2 over F_3."""
        args = ["almost", "matrix", "--n", "4", "--q", "3", "--t", "2", "--mu", "2,2"]
        result = runner.invoke(main, args)
        assert result.exit_code == 0
        payload = envelope(result)["payload"]
        assert payload["context"]["kind"] == "N"
        assert payload["unitary"]

    def test_almost_matrix_divisibility(self, runner):
        """Test that t must divide n."""
        args = ["almost", "matrix", "--n", "3", "--q", "3", "--t", "2"]
        assert runner.invoke(main, args).exit_code == 1

    def test_census_with_characteristic(self, runner):
        """Test sheaves census --n 2 --q 3 --p 3."""
        result = runner.invoke(main, ["sheaves", "census", "--n", "2", "--q", "3", "--p", "3"])
        assert result.exit_code == 0
        assert envelope(result)["payload"]["count"] == 2

    def test_census_wrong_characteristic(self, runner):
        """Test that q must be a power of p."""
        result = runner.invoke(main, ["sheaves", "census", "--n", "2", "--q", "3", "--p", "5"])
        assert result.exit_code == 1

    def test_scalar_filtered(self, runner):
        """Test sheaves scalar --n 2 --t 2 --d 2 --q 3."""
        args = ["sheaves", "scalar", "--n", "2", "--t", "2", "--d", "2", "--q", "3"]
        result = runner.invoke(main, args)
        assert result.exit_code == 0
        rows = envelope(result)["payload"]["rows"]
        assert rows
        assert all((row["t"], row["block"]["d"]) == (2, 2) for row in rows)

    def test_scalar_by_character(self, runner):
        """Test the --E filter on the principal block."""
        args = ["sheaves", "scalar", "--n", "2", "--t", "1", "--E", "1,1", "--q", "3"]
        result = runner.invoke(main, args)
        assert result.exit_code == 0
        assert len(envelope(result)["payload"]["rows"]) == 1


class TestExitCodes:
    """Tests for error handling and exit statuses."""

    def test_cap_exceeded(self, runner):
        """Test that SL_3(F_9) is beyond the enumeration cap."""
        result = runner.invoke(main, ["oracle", "classes", "--n", "3", "--q", "9"])
        assert result.exit_code == EXIT_CAP

    def test_library_error(self, runner):
        """Test that a malformed label exits with status 1."""
        result = runner.invoke(main, ["green", "kostka", "--lambda", "2", "--mu", "1"])
        assert result.exit_code == 1

    def test_uniqueness_failure(self, runner):
        """Test that a uniqueness failure emits its diagnostic and exits with status 4."""

        @click.command()
        @table_command("stub")
        def stub() -> dict:
            raise UniquenessError("no unique x_E", {"multiplicities": {"0": 1, "1": 1}})

        result = runner.invoke(stub, [])
        assert result.exit_code == EXIT_UNIQUENESS
        payload = envelope(result)["payload"]
        assert payload["error"] == "no unique x_E"
        assert payload["diagnostic"]["multiplicities"] == {"0": 1, "1": 1}


class TestVerifyCommand:
    """Tests for the verify subcommand."""

    def test_irr_count(self, runner):
        """Test verify --suite irr-count --n 2 --q 3."""
        result = runner.invoke(main, ["verify", "--suite", "irr-count", "--n", "2", "--q", "3"])
        assert result.exit_code == 0
        payload = envelope(result)["payload"]
        assert payload["passed"]
        assert (payload["expected"], payload["got"]) == (7, 7)

    def test_list(self, runner):
        """Test --list."""
        result = runner.invoke(main, ["verify", "--list"])
        assert result.exit_code == 0
        suites = {suite["name"]: suite for suite in envelope(result)["payload"]}
        assert "census" in suites
        assert suites["regular-agreement"]["aliases"] == ["lemma511-512"]

    def test_suite_alias(self, runner):
        """Test verify --suite lemma511-512."""
        result = runner.invoke(main, ["verify", "--suite", "lemma511-512", "--n", "3"])
        assert result.exit_code == 0
        payload = envelope(result)["payload"]
        assert payload["name"] == "regular-agreement"
        assert payload["passed"]

    def test_field_without_rank(self, runner):
        """Test that --q without --n is a usage error."""
        result = runner.invoke(main, ["verify", "--suite", "irr-count", "--q", "3"])
        assert result.exit_code == 2

    def test_unknown_suite(self, runner):
        """Test that an unknown suite exits with status 1."""
        result = runner.invoke(main, ["verify", "--suite", "nope"])
        assert result.exit_code == 1

    def test_census_restricted(self, runner):
        """Test the census suite with --n as upper bound."""
        result = runner.invoke(main, ["verify", "--suite", "census", "--n", "8"])
        assert result.exit_code == 0
        assert envelope(result)["payload"]["passed"]
