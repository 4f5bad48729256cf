"""
Tests for the quantumorbits command line: output formats, exit codes and logging.
"""

import importlib
import json
import os
import sys
from unittest.mock import patch

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

from src.Cli.main import buildParser, run, setupLogging
from src.Models.errors import InvalidParameterError
from src.RMatrix import TensorOperator
from src.Scalars import FIELD, Q, format_scalar

cliModule = importlib.import_module("src.Cli.main")

XI_23 = '{"n": 2, "r": 0, "eigenvalues": ["2", "3"]}'


def runJson(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


class TestParser:
    """Test argument parsing and usage errors."""

    def test_defaults(self):
        args = buildParser().parse_args(['hilbert'])
        assert args.n == 2
        assert args.quotient == 'nilcone'
        assert args.max_deg == 4
        assert not args.csv

    def test_json_and_csv_are_exclusive(self, capsys):
        assert run(['hilbert', '--json', '--csv']) == 2

    def test_no_command(self, capsys):
        assert run([]) == 2

    def test_unknown_check(self, capsys):
        assert run(['check', '--what', 'everything']) == 2

    def test_package_attribute_is_the_cli_module(self):
        assert importlib.import_module("src.Cli").main is cliModule
        assert cliModule.run is run


class TestConstructionCommands:
    def test_nf_text(self, capsys):
        assert run(['nf', 'x[1,2]*x[1,1]']) == 0
        assert capsys.readouterr().out.strip() == "(q^-1)*x[1,1]*x[1,2]"

    def test_nf_json(self, capsys):
        code, payload = runJson(capsys, ['nf', '--json', 'x[1,2]*x[1,1]'])
        assert code == 0
        assert payload["input"] == 'x[1,2]*x[1,1]'
        assert payload["normal_form"] == "(q^-1)*x[1,1]*x[1,2]"

    def test_relations(self, capsys):
        code, payload = runJson(capsys, ['relations', '--algebra', 'rea'])
        assert code == 0
        assert payload["algebra"] == "rea"
        assert len(payload["rules"]) == 6
        assert all(text.endswith(" = 0") for text in payload["relations"])

    def test_tau(self, capsys):
        code, payload = runJson(capsys, ['tau', '--d', '1'])
        assert code == 0
        assert payload["n"] == 2

    def test_tau_at_xi(self, capsys):
        code, payload = runJson(capsys, ['tau', '--d', '1', '--xi', XI_23])
        assert code == 0
        assert payload["value"] == format_scalar(2 * Q + 3 / Q)


class TestQuotientCommands:
    def test_hilbert_nilcone(self, capsys):
        code, payload = runJson(capsys, ['hilbert', '--quotient', 'nilcone', '--n', '2', '--max-deg', '4', '--json'])
        assert code == 0
        assert payload == {"dims": [1, 3, 5, 7, 9]}

    def test_hilbert_csv(self, capsys):
        assert run(['hilbert', '--max-deg', '2', '--csv']) == 0
        assert capsys.readouterr().out.splitlines() == ["degree,dim", "0,1", "1,3", "2,5"]

    def test_hilbert_orbit(self, capsys):
        code, payload = runJson(capsys, ['hilbert', '--quotient', 'orbit', '--xi', XI_23, '--max-deg', '3'])
        assert code == 0
        assert payload["dims"] == [1, 3, 5, 7]

    def test_hilbert_sphere(self, capsys):
        code, payload = runJson(capsys, ['hilbert', '--quotient', 'sphere', '--t', '0', '--d', '1', '--max-deg', '3'])
        assert code == 0
        assert payload["dims"] == [1, 3, 5, 7]

    def test_orbit_needs_xi(self, capsys):
        assert run(['hilbert', '--quotient', 'orbit']) == 2

    def test_weights_csv(self, capsys):
        assert run(['weights', '--max-deg', '1', '--csv']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "degree,weight,mult"
        assert lines.count("degree,weight,mult") == 1
        assert len(lines) == 1 + 1 + 3

    def test_weights_json(self, capsys):
        code, payload = runJson(capsys, ['weights', '--max-deg', '1'])
        assert code == 0
        assert [t["degree"] for t in payload["tables"]] == [0, 1]


class TestChecks:
    """Test the check subcommand and its exit codes."""

    @pytest.mark.parametrize(
        "argv",
        [
            ['check', '--what', 'hecke'],
            ['check', '--what', 'braid'],
            ['check', '--what', 'central', '--k', '2'],
            ['check', '--what', 'det'],
            ['check', '--what', 'pbw', '--max-deg', '3'],
        ],
    )
    def test_passing_checks(self, capsys, argv):
        code, payload = runJson(capsys, argv)
        assert code == 0
        assert payload["passed"]

    def test_pbw_rejects_sl(self, capsys):
        assert run(['check', '--what', 'pbw', '--algebra', 'sl']) == 2

    def test_failed_check_exits_one(self, capsys):
        residual = TensorOperator(2, 2, {((1, 1), (1, 1)): FIELD.one})
        with patch.object(cliModule, "check_hecke", return_value=(False, residual)):
            code, payload = runJson(capsys, ['check', '--what', 'hecke'])
        assert code == 1
        assert not payload["passed"]

    def test_unexpected_error_exits_one(self, capsys):
        with patch.object(cliModule, "hilbert", side_effect=RuntimeError("boom")):
            assert run(['hilbert']) == 1


class TestReflectionEquation:
    """Test the re-check subcommand."""

    def test_solution(self, capsys):
        code, payload = runJson(capsys, ['re-check', '--matrix', '[[0,1],[0,0]]'])
        assert code == 0
        assert payload == {"solution": True, "residuals": []}

    def test_non_solution_still_exits_zero(self, capsys):
        code, payload = runJson(capsys, ['re-check', '--matrix', '[[2,0],[0,3]]'])
        assert code == 0
        assert payload["solution"] is False
        assert payload["residuals"]

    def test_needs_matrix(self, capsys):
        assert run(['re-check']) == 2


class TestInputErrors:
    """Test that malformed input exits with code 2."""

    def test_malformed_polynomial(self, capsys):
        assert run(['nf', 'x[1']) == 2

    def test_unknown_generator(self, capsys):
        assert run(['nf', 'y[1,1]']) == 2

    def test_bad_scalar(self, capsys):
        assert run(['podles', '--t', '1/(q-1', '--d', '0']) == 2


class TestLogging:
    def test_log_file(self, capsys, tmp_path):
        assert run(['tau', '--logs-dir', str(tmp_path), '--log-level', 'INFO']) == 0
        assert list(tmp_path.glob('quantumorbits_*.log'))

    def test_invalid_level(self):
        with pytest.raises(InvalidParameterError):
            setupLogging('LOUD')
