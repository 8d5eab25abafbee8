"""
Tests for run parameters, configuration loading, reports, exports and
output formatting.
"""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from quadric_lattices.core.constants import Command, OutputFormat, Suite
from quadric_lattices.core.parameters import RunParameters
from quadric_lattices.io.cli_parser import CLIParser
from quadric_lattices.io.config_loader import ConfigLoader
from quadric_lattices.io.exporters import EXPORTS, export_object
from quadric_lattices.io.output_formatter import OutputFormatter
from quadric_lattices.utils.exceptions import (
    CapExceededError,
    ComputationError,
    ConfigurationError,
    UnknownObjectError,
    ValidationError,
)
from quadric_lattices.verification.report import Check, CheckRecorder, Report


class TestRunParameters:
    def test_defaults_validate(self):
        params = RunParameters(n=2)
        params.validate()
        assert params.to_dict()["command"] == "verify"
        assert "n=2" in repr(params)

    @pytest.mark.parametrize("n", [0, 3, -2, 2.0])
    def test_bad_dimension(self, n):
        with pytest.raises(ValidationError):
            RunParameters(n=n).validate()

    def test_verification_cap(self):
        with pytest.raises(ValidationError, match="unsafe-cap"):
            RunParameters(n=10).validate()
        RunParameters(n=10, unsafe_cap=True).validate()

    def test_export_needs_object(self):
        with pytest.raises(ValidationError):
            RunParameters(n=2, command=Command.EXPORT).validate()

    def test_chamber_needs_full_class(self):
        with pytest.raises(ValidationError):
            RunParameters(n=2, command=Command.CHAMBER).validate()
        with pytest.raises(ValidationError):
            RunParameters(n=2, command=Command.CHAMBER, class_coords=["1", "0"]).validate()
        RunParameters(n=2, command=Command.CHAMBER, class_coords=["3"] + ["-1"] * 5).validate()

    def test_bad_workers_and_samples(self):
        with pytest.raises(ValidationError):
            RunParameters(n=2, workers=0).validate()
        with pytest.raises(ValidationError):
            RunParameters(n=2, samples=0).validate()

    def test_enum_types_checked(self):
        with pytest.raises(ValidationError):
            RunParameters(n=2, suite="all").validate()


class TestConfigLoader:
    def _write(self, tmp_path, data, name="config.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)

    def test_nested(self, tmp_path):
        path = self._write(tmp_path, {"run_parameters": {"n": 4, "suite": "cones", "format": "json", "workers": 2}})
        params = ConfigLoader.load(path)
        assert params.n == 4
        assert params.suite == Suite.CONES
        assert params.output_format == OutputFormat.JSON
        assert params.workers == 2

    def test_flat(self, tmp_path):
        params = ConfigLoader.load(self._write(tmp_path, {"n": 2, "command": "export", "object": "cones.E"}))
        assert params.command == Command.EXPORT
        assert params.export_object == "cones.E"

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigurationError, match="not found"):
            ConfigLoader.load(str(tmp_path / "absent.json"))

    def test_bad_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{n: 2")
        with pytest.raises(ConfigurationError, match="Invalid JSON"):
            ConfigLoader.load(str(path))

    @pytest.mark.parametrize("data", [{"suite": "all"}, {"n": 2, "suite": "everything"}, [2]])
    def test_bad_content(self, tmp_path, data):
        with pytest.raises(ConfigurationError):
            ConfigLoader.load(self._write(tmp_path, data))

    def test_cli_overrides_config(self, tmp_path):
        path = self._write(tmp_path, {"n": 4, "suite": "cones", "samples": 50, "seed": 3})
        args = CLIParser().parse(["verify", "--config", path, "--n", "2", "--seed", "7"])
        params = ConfigLoader.merge_with_cli(ConfigLoader.load(path), args)
        assert (params.n, params.suite, params.samples, params.seed) == (2, Suite.CONES, 50, 7)

    def test_example_config(self):
        params = ConfigLoader.load(str(Path(__file__).parent.parent / "config_example.json"))
        params.validate()
        assert params.command == Command.VERIFY


class TestCLIParser:
    def test_needs_n_or_config(self):
        parser = CLIParser()
        with pytest.raises(ValidationError):
            parser.create_parameters_from_args(parser.parse(["verify"]))

    def test_chamber_arguments(self):
        parser = CLIParser()
        args = parser.parse(["chamber", "--n", "2", "--basis", "antiK_E", "--class", "1", "0", "0", "0", "0", "0"])
        params = parser.create_parameters_from_args(args)
        assert params.command == Command.CHAMBER
        assert params.basis == "antiK_E"
        assert params.class_coords == ["1", "0", "0", "0", "0", "0"]

    def test_unknown_suite_exits(self):
        with pytest.raises(SystemExit):
            CLIParser().parse(["verify", "--n", "2", "--suite", "everything"])


class TestReport:
    def test_check_comparison(self):
        assert Check("a.b", "anchor", Fraction(1, 2), Fraction(2, 4)).passed
        assert not Check("a.b", "anchor", 1, 2).passed

    def test_plain_values(self):
        data = Check("a.b", "anchor", {"x": Fraction(1, 3)}, frozenset({2, 1})).to_dict()
        assert data["expected"] == {"x": "1/3"}
        assert data["computed"] == [1, 2]
        assert data["pass"] is False

    def test_recorder_turns_errors_into_failures(self):
        rec = CheckRecorder("suite")

        def broken():
            raise ComputationError("no rays")

        check = rec.record("x", "anchor", 1, broken)
        assert check.check_id == "suite.x"
        assert not check.passed
        assert "no rays" in check.computed

    def test_recorder_lets_cap_errors_through(self):
        def capped():
            raise CapExceededError("too big")

        with pytest.raises(CapExceededError):
            CheckRecorder("suite").record("x", "anchor", 1, capped)

    def test_report_summary(self):
        report = Report(2, "lattice", [Check("a.one", "", 1, 1), Check("a.two", "", 1, 2)], ["a.three"])
        assert not report.passed
        assert [c.check_id for c in report.failures] == ["a.two"]
        data = report.to_dict()
        assert (data["total"], data["failed"], data["skipped"]) == (2, 1, ["a.three"])
        assert list(report.to_dataframe()["pass"]) == [True, False]


class TestOutputFormatter:
    def _report(self):
        return Report(2, "lattice", [Check("a.one", "first", 1, 1), Check("a.two", "second", 1, 2)], ["a.three"])

    def test_text(self):
        text = OutputFormatter.format_report(self._report(), OutputFormat.TEXT)
        assert "[PASS] a.one" in text
        assert "[FAIL] a.two" in text
        assert "expected: 1" in text
        assert "1/2 checks passed" in text
        assert "a.three" in text

    def test_json_and_csv(self):
        data = json.loads(OutputFormatter.format_report(self._report(), OutputFormat.JSON))
        assert data["schema"] == 1
        csv = OutputFormatter.format_report(self._report(), OutputFormat.CSV)
        assert csv.splitlines()[0] == "id,anchor,expected,computed,pass,seconds"

    def test_write(self, tmp_path, capsys):
        OutputFormatter.write("hello\n", None)
        assert capsys.readouterr().out == "hello\n"
        path = tmp_path / "out.txt"
        OutputFormatter.write("hello\n", str(path))
        assert path.read_text() == "hello\n"


class TestExports:
    def test_unknown_object(self):
        with pytest.raises(UnknownObjectError):
            export_object("cones.F", 2)

    def test_caps(self):
        with pytest.raises(CapExceededError):
            export_object("chambers", 4)

    def test_cone_E(self):
        export = export_object("cones.E", 2)
        data = export.to_dict()
        assert (data["schema"], data["object"], data["n"]) == (1, "cones.E", 2)
        assert (data["ray_count"], data["facet_count"]) == (16, 26)
        assert set(export.table["kind"]) == {"ray", "facet"}
        assert all(export.table[export.table["kind"] == "ray"]["name"] != "")

    def test_weyl_generators(self):
        data = export_object("weyl.generators", 2).to_dict()
        assert data["W'"]["order"] == 16
        assert data["W(D_N)"]["N"] == 5

    def test_arrangement_size(self):
        assert export_object("arrangement", 4).payload["count"] == 2 * 2 ** 6

    @pytest.mark.parametrize("name", sorted(EXPORTS))
    def test_every_object_serializes_at_n2(self, name):
        export = export_object(name, 2)
        assert json.loads(json.dumps(export.to_dict()))["object"] == name
