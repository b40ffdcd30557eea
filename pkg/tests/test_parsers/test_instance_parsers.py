"""Tests for the JSON and YAML instance loaders."""

import json
import os
import tempfile
from fractions import Fraction

import pytest
import yaml
from good_set_analyzer.catalog.examples import EXAMPLES, emit_examples
from good_set_analyzer.errors import InstanceParseError
from good_set_analyzer.models.space import Coordinate
from good_set_analyzer.parsers import (
    INSTANCE_EXTENSIONS,
    JSONInstanceParser,
    YAMLInstanceParser,
    get_instance_parser,
    load_instance,
)

SAMPLE = {
    "name": "sample",
    "axes": [{"name": "x", "values": [0, 1]}, {"name": "y", "values": ["a", "b"]}],
    "points": [[0, "a"], [1, "a"], [0, "b"]],
    "f": {"0": "1/2", "2": -3},
    "pins": [{"axis": "x", "value": 0, "rational": "0"}],
    "measure": {"0": "1/3", "1": "1/3", "2": "1/3"},
}


def write_json(tmp_path, data, name="instance.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


class TestParserSelection:
    """Test cases for get_instance_parser."""

    def test_by_extension(self):
        """Test that the extension picks the format."""
        assert isinstance(get_instance_parser("a.json"), JSONInstanceParser)
        assert isinstance(get_instance_parser("a.YAML"), YAMLInstanceParser)
        assert isinstance(get_instance_parser("a.yml"), YAMLInstanceParser)

    def test_unsupported(self):
        """Test that other extensions are refused."""
        with pytest.raises(InstanceParseError, match="Unsupported"):
            get_instance_parser("a.xml")

    def test_extensions_come_from_the_parsers(self):
        """Test that every extension a parser declares selects that parser."""
        for parser_class in (JSONInstanceParser, YAMLInstanceParser):
            for extension in parser_class().extensions:
                assert extension in INSTANCE_EXTENSIONS
                assert isinstance(get_instance_parser("a" + extension), parser_class)
        assert sorted(INSTANCE_EXTENSIONS) == [".json", ".yaml", ".yml"]

    @pytest.mark.parametrize("parser_class", [JSONInstanceParser, YAMLInstanceParser])
    def test_not_utf8(self, tmp_path, parser_class):
        """Test that undecodable bytes raise InstanceParseError."""
        path = tmp_path / ("bad" + parser_class().extensions[0])
        path.write_bytes(b"\xff\xfe{}")
        with pytest.raises(InstanceParseError, match="UTF-8"):
            parser_class().parse_file(str(path))


class TestJSONInstanceParser:
    """Test cases for JSON instance files."""

    def test_full_document(self, tmp_path):
        """Test every section of the schema."""
        instance = load_instance(write_json(tmp_path, SAMPLE))
        assert instance.name == "sample"
        assert [axis.name for axis in instance.space.axes] == ["x", "y"]
        assert [p.coords for p in instance.points] == [("0", "a"), ("1", "a"), ("0", "b")]
        assert [v for _, v in instance.function.items()] == [Fraction(1, 2), 0, -3]
        assert dict(instance.pins) == {Coordinate(0, "0"): 0}
        assert instance.measure_weights == {k: Fraction(1, 3) for k in range(3)}

    def test_name_defaults_to_file_stem(self, tmp_path):
        """Test the fallback instance name."""
        data = {k: v for k, v in SAMPLE.items() if k != "name"}
        assert load_instance(write_json(tmp_path, data, "staircase.json")).name == "staircase"

    def test_optional_sections(self, tmp_path):
        """Test a document with only axes and points."""
        data = {"axes": SAMPLE["axes"], "points": SAMPLE["points"]}
        instance = load_instance(write_json(tmp_path, data))
        assert instance.function is None
        assert instance.pins is None
        assert instance.measure_weights is None

    def test_invalid_json(self, tmp_path):
        """Test that malformed JSON is a parse error."""
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(InstanceParseError, match="invalid JSON"):
            load_instance(str(path))

    def test_missing_file(self, tmp_path):
        """Test that an unreadable file is a parse error."""
        with pytest.raises(InstanceParseError, match="Cannot read"):
            load_instance(str(tmp_path / "absent.json"))

    @pytest.mark.parametrize(
        "change, message",
        [
            ({"axes": []}, "nonempty list"),
            ({"axes": [{"name": "x"}]}, "'name' and 'values'"),
            ({"points": [[0, "c"], [1, "a"], [0, "b"]]}, ""),
            ({"points": [[0, "a"], [0, "a"], [0, "b"]]}, ""),
            ({"points": [[0.5, "a"]]}, "string or integer"),
            ({"f": {"3": 1}}, "out of range"),
            ({"f": {"zero": 1}}, "not a point index"),
            ({"f": {"0": 0.5}}, "not a rational"),
            ({"f": {"0": "1/0"}}, "zero denominator"),
            ({"pins": [{"axis": "x", "value": 0}]}, "'axis', 'value' and 'rational'"),
            ({"pins": [{"axis": "w", "value": 0, "rational": 0}]}, ""),
            (
                {"pins": [{"axis": "x", "value": 0, "rational": 0}] * 2},
                "pinned twice",
            ),
            ({"name": 7}, "'name' must be a string"),
        ],
    )
    def test_schema_errors(self, tmp_path, change, message):
        """Test that schema violations are reported as parse errors."""
        data = dict(SAMPLE)
        data.update(change)
        with pytest.raises(InstanceParseError, match=message):
            load_instance(write_json(tmp_path, data))

    def test_document_must_be_a_mapping(self, tmp_path):
        """Test a top-level list."""
        with pytest.raises(InstanceParseError, match="mapping"):
            load_instance(write_json(tmp_path, [1, 2]))


class TestYAMLInstanceParser:
    """Test cases for YAML instance files."""

    def test_same_schema_as_json(self, tmp_path):
        """Test that a YAML document loads like its JSON twin."""
        path = tmp_path / "sample.yaml"
        path.write_text(yaml.safe_dump(SAMPLE), encoding="utf-8")
        assert load_instance(str(path)) == load_instance(write_json(tmp_path, SAMPLE))

    def test_invalid_yaml(self, tmp_path):
        """Test that malformed YAML is a parse error."""
        path = tmp_path / "broken.yaml"
        path.write_text("axes: [unclosed", encoding="utf-8")
        with pytest.raises(InstanceParseError, match="invalid YAML"):
            load_instance(str(path))


class TestCatalogFiles:
    """Test cases for the emitted example files."""

    @pytest.mark.parametrize("extension", [".json", ".yaml"])
    def test_emitted_examples_load_back(self, extension):
        """Test that every shipped instance survives a write and a load."""
        with tempfile.TemporaryDirectory() as temp_dir:
            written = emit_examples(temp_dir, extension)
            assert [os.path.basename(p) for p in written] == [name + extension for name in EXAMPLES]
            for name, path in zip(EXAMPLES, written):
                assert load_instance(path) == EXAMPLES[name](), name

    def test_emitted_json_is_stable(self):
        """Test that two emissions give identical bytes."""
        with tempfile.TemporaryDirectory() as first, tempfile.TemporaryDirectory() as second:
            for a, b in zip(emit_examples(first), emit_examples(second)):
                with open(a, encoding="utf-8") as fa, open(b, encoding="utf-8") as fb:
                    assert fa.read() == fb.read()
