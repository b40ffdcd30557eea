"""Tests for the Instance model."""

from fractions import Fraction

from good_set_analyzer.catalog.examples import ex02, t4
from good_set_analyzer.models.instance import Instance


class TestInstance:
    """Test cases for Instance serialization."""

    def test_to_dict_schema(self):
        """Test the instance-file layout produced for ex02."""
        data = ex02().to_dict()
        assert data["axes"] == [
            {"name": "x1", "values": ["0", "1"]},
            {"name": "x2", "values": ["0", "1"]},
        ]
        assert data["points"] == [["0", "0"], ["1", "0"], ["0", "1"]]
        assert data["f"] == {"0": "1", "1": "2", "2": "3"}
        assert data["pins"] == [{"axis": "x1", "value": "0", "rational": "0"}]
        assert "measure" not in data

    def test_zero_values_are_omitted(self):
        """Test that f only lists nonzero values and the measure is written as strings."""
        data = t4().to_dict()
        assert data["f"] == {"3": "1"}
        assert data["measure"] == {str(k): "1/4" for k in range(4)}

    def test_digest_is_stable(self):
        """Test that the digest depends on content only."""
        assert ex02().digest() == ex02().digest()
        assert ex02().digest() != t4().digest()
        assert len(ex02().digest()) == 64

    def test_bare_instance(self):
        """Test an instance with nothing but points."""
        source = ex02()
        bare = Instance(source.space, source.points)
        data = bare.to_dict()
        assert set(data) == {"axes", "points"}
        assert bare.measure_weights is None

    def test_measure_weights_are_fractions(self):
        """Test that the catalog stores exact weights."""
        assert t4().measure_weights == {k: Fraction(1, 4) for k in range(4)}
