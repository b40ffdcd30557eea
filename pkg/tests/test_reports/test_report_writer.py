"""Tests for report assembly and rendering."""

import json
import os
import tempfile

import pytest
from good_set_analyzer.catalog.examples import ex05
from good_set_analyzer.reports.report_writer import ReportWriter, render_json, render_text


class TestReportWriter:
    """Test cases for ReportWriter."""

    def test_build_envelope(self):
        """Test the command, instance and result sections."""
        instance = ex05()
        report = ReportWriter().build("check-good", instance, {"good": True}, {"method": "direct"}, 0.5)
        assert report["command"] == {"name": "check-good", "options": {"method": "direct"}}
        assert report["instance"] == {"name": "ex05", "digest": instance.digest()}
        assert report["result"] == {"good": True}
        assert "timing" not in report

    def test_timing_is_opt_in(self):
        """Test that elapsed time appears only when asked for."""
        report = ReportWriter(include_timing=True).build("stats", None, {}, elapsed=0.1234567)
        assert report["timing"] == {"elapsed_seconds": 0.123457}
        assert "instance" not in report

    def test_unknown_format(self):
        """Test that only json and txt are accepted."""
        with pytest.raises(ValueError, match="Unsupported output format"):
            ReportWriter("xml")

    def test_write_to_file(self):
        """Test that the rendered report lands in a new directory."""
        writer = ReportWriter()
        report = writer.build("stats", None, {"size": 3})
        with tempfile.TemporaryDirectory() as temp_dir:
            path = os.path.join(temp_dir, "reports", "stats.json")
            text = writer.write(report, path)
            with open(path, encoding="utf-8") as f:
                assert f.read() == text
            assert json.loads(text)["result"] == {"size": 3}

    def test_digest_is_stable(self):
        """Test that the digest does not depend on the build."""
        assert ex05().digest() == ex05().digest()


class TestRendering:
    """Test cases for the JSON and text renderers."""

    def test_json_is_sorted(self):
        """Test key order and the trailing newline."""
        text = render_json({"b": 1, "a": [1, 2]})
        assert text.endswith("}\n")
        assert text.index('"a"') < text.index('"b"')

    def test_text_layout(self):
        """Test nesting, flat lists and booleans."""
        text = render_text({"a": 1, "b": {"c": True, "d": [1, 2]}, "e": None})
        assert text == "a: 1\nb:\n  c: yes\n  d: [1, 2]\ne: -\n"

    def test_text_lists_of_mappings(self):
        """Test that nested records are rendered as list items."""
        text = render_text({"items": [{"k": [1, [2]]}]})
        assert text.splitlines() == ["items:", "  -", "    k:", "      - 1", "      - [2]"]
