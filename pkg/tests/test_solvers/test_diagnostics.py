"""Tests for gauge freedom and boundedness diagnostics."""

import random
from fractions import Fraction

import pytest
from good_set_analyzer.catalog.examples import ex05, ex07, ex10, t4
from good_set_analyzer.errors import PreconditionError
from good_set_analyzer.models.functions import PinSet
from good_set_analyzer.models.space import Point
from good_set_analyzer.solvers import base_pins, bound_diagnostics, gauge_freedom, solve_direct
from tests.instance_factory import random_full_set, random_function, random_rational


def axis_constant(d, axis):
    """The single value a decomposition takes on ``axis``."""
    values = set(d.axis_values(axis).values())
    assert len(values) == 1, values
    return values.pop()


class TestGaugeFreedom:
    """Test cases for gauge_freedom."""

    def test_full_set_without_pins(self):
        """Test that a full set has n − 1 free constants."""
        assert gauge_freedom(ex05().points).dimension == 2

    def test_base_pins_remove_the_freedom(self):
        """Test that pinning the base's first n − 1 coordinates leaves nothing."""
        s = ex05().points
        pins = PinSet.zeros(base_pins(s.canonical()[0]))
        assert gauge_freedom(s, pins).is_trivial()

    def test_non_full_set(self):
        """Test that ex07 has as much freedom as its deficiency."""
        s = ex07().points
        assert gauge_freedom(s).dimension == s.deficiency()

    def test_freedom_is_constants_on_unpinned_axes(self):
        """Test that pinning one whole axis leaves per-axis constants summing to zero."""
        rng = random.Random(41)
        for _ in range(40):
            s = random_full_set(rng, n_choices=(3, 4))
            kernel = gauge_freedom(s, PinSet.zeros(s.projection(0)))
            assert kernel.dimension == s.n - 2
            for d in kernel.as_decompositions():
                assert set(d.axis_values(0).values()) == {0}
                constants = [axis_constant(d, i) for i in range(1, s.n)]
                assert sum(constants) == 0

    def test_two_solutions_differ_by_axis_constants(self):
        """Test that solves under different base pins differ by constants summing to zero."""
        rng = random.Random(43)
        for _ in range(100):
            s = random_full_set(rng, n_choices=(2, 3, 4))
            f = random_function(rng, s)
            pinned = base_pins(rng.choice(s.points))
            pins_a = PinSet({c: random_rational(rng) for c in pinned})
            pins_b = PinSet({c: random_rational(rng) for c in pinned})
            first, second = solve_direct(s, f, pins_a), solve_direct(s, f, pins_b)
            difference = first.decomposition.combine(1, second.decomposition, -1)
            constants = [axis_constant(difference, i) for i in range(s.n)]
            assert sum(constants) == 0
            for c in pinned:
                assert constants[c.axis] == pins_a[c] - pins_b[c]


class TestBoundDiagnostics:
    """Test cases for bound_diagnostics."""

    def test_doubling_chain(self):
        """Test the worst indicator at depth five."""
        diagnostics = bound_diagnostics(ex10(5).points)
        assert diagnostics.base == Point(("x0", "y0", "z0"))
        assert diagnostics.max_abs_value == 32
        assert diagnostics.worst_point == Point(("x0", "y0", "z0"))
        assert diagnostics.geodesic_lengths[diagnostics.base] == 1

    def test_values_grow_with_depth(self):
        """Test that each step doubles the worst value."""
        values = [bound_diagnostics(ex10(k).points).max_abs_value for k in range(1, 5)]
        assert values == [2, 4, 8, 16]

    def test_t4_lengths(self):
        """Test the length distribution of T4."""
        diagnostics = bound_diagnostics(t4().points)
        assert diagnostics.max_geodesic_length == 4
        assert diagnostics.length_distribution() == {1: 1, 4: 3}
        assert diagnostics.mean_geodesic_length == Fraction(13, 4)

    def test_several_components(self):
        """Test that diagnostics are refused across components."""
        with pytest.raises(PreconditionError, match="related components"):
            bound_diagnostics(ex07().points)

    def test_base_must_be_member(self):
        """Test the base point check."""
        with pytest.raises(PreconditionError, match="not in the set"):
            bound_diagnostics(ex05().points, base=Point(("1", "1", "1")))
