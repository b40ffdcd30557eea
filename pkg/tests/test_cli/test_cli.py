"""Tests for the command-line interface."""

import json
import os

import pytest
from good_set_analyzer.catalog.examples import EXAMPLES
from good_set_analyzer.cli import (
    EXIT_OK,
    EXIT_PARSE,
    EXIT_PRECONDITION,
    create_parser,
    parse_pins,
    run,
)
from good_set_analyzer.errors import InstanceParseError
from good_set_analyzer.models.space import Coordinate


@pytest.fixture
def examples_dir(tmp_path):
    """Directory holding every shipped instance as JSON."""
    directory = tmp_path / "examples_out"
    assert run(["emit-examples", str(directory), "--out", str(tmp_path / "emitted.json")]) == EXIT_OK
    return directory


def run_json(capsys, argv):
    """Run a command and decode its JSON report from stdout."""
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


class TestParser:
    """Test cases for argument parsing."""

    def test_common_flags_follow_the_command(self):
        """Test that shared flags are accepted after the subcommand."""
        args = create_parser().parse_args(["stats", "a.json", "--output-format", "txt", "--timing"])
        assert args.command == "stats"
        assert args.output_format == "txt"
        assert args.timing

    def test_geodesic_needs_both_ends(self):
        """Test that --from and --to are required."""
        with pytest.raises(SystemExit) as excinfo:
            create_parser().parse_args(["geodesic", "a.json", "--from", "0"])
        assert excinfo.value.code == EXIT_PARSE

    def test_unknown_command(self):
        """Test that an unknown command is an argparse error."""
        with pytest.raises(SystemExit) as excinfo:
            create_parser().parse_args(["triangulate", "a.json"])
        assert excinfo.value.code == EXIT_PARSE

    def test_usage_errors_are_not_precondition_failures(self, capsys):
        """Test that a non-integer point index exits with the parse-error code, not 2."""
        with pytest.raises(SystemExit) as excinfo:
            run(["geodesic", "t4.json", "--from", "abc", "--to", "1"])
        assert excinfo.value.code == EXIT_PARSE
        assert "invalid int value" in capsys.readouterr().err


class TestParsePins:
    """Test cases for the --pins syntax."""

    def test_valid(self):
        """Test several pins with rationals."""
        pins = parse_pins("x:x0=0, y:y0=-1/2", EXAMPLES["ex10_depth2"]())
        assert dict(pins) == {Coordinate(0, "x0"): 0, Coordinate(1, "y0"): -0.5}

    @pytest.mark.parametrize("text", ["x=0", "x:x0", "w:x0=0", "x:x9=0", "x:x0=0.5"])
    def test_invalid(self, text):
        """Test malformed pins and pins outside the space."""
        with pytest.raises(InstanceParseError):
            parse_pins(text, EXAMPLES["ex10_depth2"]())


class TestCommands:
    """Test cases for each command on the shipped instances."""

    def test_emit_examples(self, examples_dir):
        """Test the emitted catalog files."""
        names = sorted(os.listdir(examples_dir))
        assert names == sorted(name + ".json" for name in EXAMPLES)
        ex07 = json.loads((examples_dir / "ex07.json").read_text(encoding="utf-8"))
        assert {tuple(p) for p in ex07["points"]} == {
            ("1", "2", "3"),
            ("4", "5", "6"),
            ("7", "8", "9"),
            ("1", "5", "9"),
        }
        ex08 = json.loads((examples_dir / "ex08.json").read_text(encoding="utf-8"))
        assert [len(axis["values"]) for axis in ex08["axes"]] == [3, 3, 3]
        assert len(ex08["points"]) == 7
        depth6 = json.loads((examples_dir / "ex10_depth6.json").read_text(encoding="utf-8"))
        assert len(depth6["points"]) == 19
        assert [len(axis["values"]) for axis in depth6["axes"]] == [8, 8, 7]

    def test_emit_examples_yaml(self, tmp_path, capsys):
        """Test the YAML variant of the catalog."""
        code, report = run_json(capsys, ["emit-examples", str(tmp_path), "--format", "yaml"])
        assert code == EXIT_OK
        assert len(report["result"]["written"]) == len(EXAMPLES)
        assert (tmp_path / "t4.yaml").exists()

    def test_check_good_e5plus(self, examples_dir, capsys):
        """Test the loop certificate of e5plus."""
        code, report = run_json(capsys, ["check-good", str(examples_dir / "e5plus.json")])
        assert code == EXIT_OK
        assert report["result"] == {
            "good": False,
            "loop": {"points": [0, 1, 2, 3, 4], "coefficients": [2, -1, -1, -1, 1]},
        }
        assert report["instance"]["name"] == "e5plus"
        assert report["command"]["name"] == "check-good"

    def test_find_loop_on_good_set(self, examples_dir, capsys):
        """Test that a good set reports no loop."""
        code, report = run_json(capsys, ["find-loop", str(examples_dir / "ex05.json")])
        assert code == EXIT_OK
        assert report["result"] == {"loop": None}

    def test_is_full(self, examples_dir, capsys):
        """Test both fullness tests and the addable points of ex07."""
        code, report = run_json(capsys, ["is-full", str(examples_dir / "ex07.json")])
        result = report["result"]
        assert code == EXIT_OK
        assert result["full"] is False and result["full_by_span"] is False
        assert result["deficiency"] == 5
        assert result["addable"]

    def test_fullify_and_split(self, examples_dir, capsys):
        """Test the closure and the split of ex07."""
        path = str(examples_dir / "ex07.json")
        _, report = run_json(capsys, ["fullify", path])
        assert report["result"]["size"] == 7
        _, report = run_json(capsys, ["split", path])
        assert sorted(report["result"]["original"]) == [0, 1, 2, 3]
        assert len(report["result"]["added"]) == 3
        assert len(report["result"]["boundary"]) == 5

    def test_maximalize(self, examples_dir, capsys):
        """Test that a maximal extension of ex05 fills a good set of the cube."""
        code, report = run_json(capsys, ["maximalize", str(examples_dir / "ex05.json")])
        assert code == EXIT_OK
        assert report["result"]["size"] == 4

    def test_geodesic_t4(self, examples_dir, capsys):
        """Test the length-four geodesic of T4."""
        code, report = run_json(
            capsys, ["geodesic", str(examples_dir / "t4.json"), "--from", "0", "--to", "3"]
        )
        assert code == EXIT_OK
        result = report["result"]
        assert result["length"] == 4
        assert sorted(result["points"]) == [0, 1, 2, 3]
        assert (result["from"], result["to"]) == (0, 3)
        assert report["command"]["options"] == {"from": 0, "to": 3}

    def test_geodesic_index_out_of_range(self, examples_dir, capsys):
        """Test that a bad point index is a precondition failure."""
        code = run(["geodesic", str(examples_dir / "t4.json"), "--from", "0", "--to", "9"])
        assert code == EXIT_PRECONDITION

    def test_components_and_boundary(self, examples_dir, capsys):
        """Test the ex07 partition and both boundary constructions."""
        path = str(examples_dir / "ex07.json")
        _, report = run_json(capsys, ["components", path])
        assert report["result"]["count"] == 4
        _, report = run_json(capsys, ["boundary", path])
        assert len(report["result"]["boundary"]) == 5
        assert report["result"]["meets_every_axis"] is False
        _, report = run_json(capsys, ["boundary", path, "--split"])
        assert {b["axis"] for b in report["result"]["boundary"]} == {"x1", "x2", "x3"}
        assert sorted(report["result"]["associated_full_set"]["original"]) == [0, 1, 2, 3]

    def test_solve_ex10_depth2(self, examples_dir, capsys):
        """Test W(z₂) = 4 with the pins stored in the file."""
        code, report = run_json(
            capsys, ["solve", str(examples_dir / "ex10_depth2.json"), "--method", "direct"]
        )
        assert code == EXIT_OK
        result = report["result"]
        assert result["verdict"] == "unique"
        assert result["decomposition"]["z"]["z2"] == "4"
        assert result["decomposition"]["x"]["x2"] == "-2"

    def test_solve_geodesic_with_base_and_pins(self, examples_dir, capsys):
        """Test the geodesic method from a chosen base point."""
        path = str(examples_dir / "t4.json")
        code, report = run_json(
            capsys, ["solve", path, "--method", "geodesic", "--base", "1", "--pins", "x1:1=0,x2:1=0"]
        )
        assert code == EXIT_OK
        assert report["result"]["max_geodesic_length"] == 4
        _, direct = run_json(capsys, ["solve", path, "--pins", "x1:1=0,x2:1=0"])
        assert report["result"]["decomposition"] == direct["result"]["decomposition"]

    def test_solve_componentwise_on_shared_values(self, examples_dir, capsys):
        """Test that ex07 is refused by the componentwise method."""
        code = run(["solve", str(examples_dir / "ex07.json"), "--method", "componentwise"])
        assert code == EXIT_PRECONDITION

    def test_solve_boundary_without_f(self, examples_dir, capsys):
        """Test the boundary method on ex07 with the zero function."""
        code, report = run_json(
            capsys, ["solve", str(examples_dir / "ex07.json"), "--method", "boundary"]
        )
        assert code == EXIT_OK
        assert report["result"]["verdict"] == "unique"
        assert report["result"]["max_abs_value"] == "0"

    def test_base_only_for_geodesic(self, examples_dir, capsys):
        """Test that --base is refused for other methods."""
        code = run(["solve", str(examples_dir / "t4.json"), "--base", "0"])
        assert code == EXIT_PRECONDITION

    def test_inconsistent_solve_exits_zero(self, examples_dir, capsys):
        """Test that the verdict lives in the payload, not the exit code."""
        code, report = run_json(capsys, ["solve", str(examples_dir / "rectangle.json")])
        assert code == EXIT_OK
        assert report["result"]["verdict"] == "inconsistent"

    def test_simplicial(self, examples_dir, capsys):
        """Test the perturbation reported for e5plus."""
        code, report = run_json(capsys, ["simplicial", str(examples_dir / "e5plus.json")])
        assert code == EXIT_OK
        result = report["result"]
        assert result["simplicial"] is False
        assert result["eps"] == "1/10"
        assert result["mu_set"] is False

    def test_stats(self, examples_dir, capsys):
        """Test the summary of the depth-six chain."""
        _, report = run_json(capsys, ["stats", str(examples_dir / "ex10_depth6.json")])
        result = report["result"]
        assert result["size"] == 19
        assert result["axis_sizes"] == {"x": 8, "y": 8, "z": 7}
        assert result["projection_sizes"] == {"x": 7, "y": 7, "z": 7}
        assert result["deficiency"] == 2
        assert result["full"] is True
        assert result["components"] == 1

    def test_diagnostics(self, examples_dir, capsys):
        """Test the worst indicator at depth five."""
        code, report = run_json(capsys, ["diagnostics", str(examples_dir / "ex10_depth5.json")])
        assert code == EXIT_OK
        assert report["result"]["max_abs_value"] == "32"
        assert report["result"]["worst_point"] == 0

    def test_split_of_full_set(self, examples_dir, capsys):
        """Test that splitting a full set is a precondition failure."""
        assert run(["split", str(examples_dir / "ex05.json")]) == EXIT_PRECONDITION


class TestRunBehavior:
    """Test cases for output handling and exit codes."""

    def test_reports_are_deterministic(self, examples_dir, capsys):
        """Test byte-identical output across runs."""
        argv = ["boundary", str(examples_dir / "ex07.json")]
        run(argv)
        first = capsys.readouterr().out
        run(argv)
        assert capsys.readouterr().out == first

    def test_out_file(self, examples_dir, tmp_path, capsys):
        """Test that --out writes the report instead of printing it."""
        target = tmp_path / "reports" / "good.json"
        code = run(["check-good", str(examples_dir / "ex05.json"), "--out", str(target)])
        assert code == EXIT_OK
        assert capsys.readouterr().out == ""
        assert json.loads(target.read_text(encoding="utf-8"))["result"] == {"good": True}

    def test_text_format(self, examples_dir, capsys):
        """Test the human-readable report."""
        run(["check-good", str(examples_dir / "ex05.json"), "--output-format", "txt"])
        out = capsys.readouterr().out
        assert out.startswith("command:")
        assert "good: yes" in out

    def test_timing_from_config(self, examples_dir, tmp_path, capsys):
        """Test that the config file can turn timing on."""
        config = tmp_path / "analyzer.yaml"
        config.write_text("report:\n  include_timing: true\n", encoding="utf-8")
        _, report = run_json(
            capsys, ["stats", str(examples_dir / "ex05.json"), "--config", str(config)]
        )
        assert "elapsed_seconds" in report["timing"]

    def test_missing_instance(self, tmp_path):
        """Test that a missing file is a parse error."""
        assert run(["check-good", str(tmp_path / "absent.json")]) == EXIT_PARSE

    def test_malformed_instance(self, tmp_path):
        """Test that a broken instance is a parse error."""
        path = tmp_path / "broken.json"
        path.write_text('{"axes": []}', encoding="utf-8")
        assert run(["check-good", str(path)]) == EXIT_PARSE

    @pytest.mark.parametrize("name", ["latin1.json", "latin1.yaml"])
    def test_instance_not_utf8(self, tmp_path, name):
        """Test that an instance file with invalid UTF-8 bytes is a parse error."""
        path = tmp_path / name
        path.write_bytes(b"name: caf\xe9\n\xff\n")
        assert run(["check-good", str(path)]) == EXIT_PARSE

    def test_config_not_utf8(self, examples_dir, tmp_path):
        """Test that a configuration file with invalid UTF-8 bytes is a parse error."""
        config = tmp_path / "config.yaml"
        config.write_bytes(b"search:\n  max_points: \xff\n")
        code = run(["check-good", str(examples_dir / "ex02.json"), "--config", str(config)])
        assert code == EXIT_PARSE

    def test_bad_pins(self, examples_dir):
        """Test that malformed --pins is a parse error."""
        code = run(["solve", str(examples_dir / "ex02.json"), "--pins", "x1=0"])
        assert code == EXIT_PARSE
