"""End-to-end checks on the worked examples and randomized property runs."""

import itertools
import random
from fractions import Fraction

import networkx as nx
import pytest
import sympy
from good_set_analyzer.analysis.goodness import is_full, is_good, theorem4_split
from good_set_analyzer.analysis.structure import boundary, geodesic, related_components
from good_set_analyzer.catalog.examples import EX10_MAX_DEPTH, e5plus, ex05, ex10, t4
from good_set_analyzer.linalg.exact import SolveVerdict, verify_circuit
from good_set_analyzer.measures.finite_measure import FiniteMeasure, is_simplicial, marginals
from good_set_analyzer.models.functions import FunctionTable, PinSet
from good_set_analyzer.models.space import PointSet, Space
from good_set_analyzer.solvers import (
    base_pins,
    solve_direct,
    solve_via_geodesics,
    solve_with_boundary,
)
from tests.instance_factory import (
    full_subsets,
    random_decomposition,
    random_full_set,
    random_function,
    random_good_set,
    random_non_full_good_set,
    random_point_set,
    random_rational,
)


class TestWorkedExamples:
    """The doubling chain, the T4 geodesics and the five-point loop."""

    @pytest.mark.parametrize("depth", range(1, EX10_MAX_DEPTH + 1))
    def test_doubling_chain(self, depth):
        """Test U(xₘ) = V(yₘ) = −2ᵐ⁻¹ and W(zₘ) = 2ᵐ at every depth."""
        instance = ex10(depth)
        report = solve_direct(instance.points, instance.function, instance.pins)
        assert report.verdict is SolveVerdict.UNIQUE
        d = report.decomposition
        assert d.value(2, "z0") == 1
        for m in range(1, depth + 1):
            assert d.value(0, f"x{m}") == -(2 ** (m - 1))
            assert d.value(1, f"y{m}") == -(2 ** (m - 1))
            assert d.value(2, f"z{m}") == 2 ** m

    def test_t4_geodesics_are_unique_and_whole(self):
        """Test that every pair of T4 needs all four points and no smaller full set exists."""
        s = t4().points
        smaller = [f for k in range(1, 4) for f in full_subsets(s, k)]
        for x, y in itertools.combinations(s, 2):
            assert geodesic(s, x, y).points == s
            assert not [f for f in smaller if x in f and y in f]

    def test_t4_boundary(self):
        """Test the boundary of T4: one class per axis and one relation."""
        construction = boundary(t4().points)
        assert construction.relations == ((1, 1, 1),)
        assert construction.pivots == (0,)
        assert [str(c) for c in construction.boundary] == ["ax2:0", "ax3:0"]

    def test_five_point_loop(self):
        """Test that ex05 is good and adding (1,1,1) closes a verified loop."""
        assert is_good(ex05().points).good
        verdict = is_good(e5plus().points)
        assert not verdict.good
        assert len(verdict.loop.support) == 5
        assert verdict.loop.formal_sum() == {}
        verify_circuit(verdict.loop)


@pytest.mark.slow
class TestFullnessProperties:
    """Randomized checks of fullness, geodesics and the split."""

    def test_fullness_tests_agree(self):
        """Test the deficiency test against span membership on 1000 random sets."""
        rng = random.Random(2024)
        for _ in range(1000):
            s = random_point_set(rng)
            assert is_full(s) == is_full(s, method="span"), s

    def test_unique_minimal_full_subset_per_related_pair(self):
        """Test that each related pair has exactly one full subset of least size."""
        rng = random.Random(17)
        for _ in range(200):
            s = random_good_set(rng, max_points=10)
            fulls = full_subsets(s)
            for x, y in itertools.combinations(s, 2):
                containing = [f for f in fulls if x in f and y in f]
                g = geodesic(s, x, y)
                if not containing:
                    assert g is None
                    continue
                least = min(len(f) for f in containing)
                minimal = [f for f in containing if len(f) == least]
                assert len(minimal) == 1, (s, x, y)
                assert g.points == minimal[0]

    def test_intersection_of_overlapping_full_sets(self):
        """Test that A ∩ B is full when A, B and A ∪ B are full and A, B overlap."""
        rng = random.Random(31)
        checked = 0
        while checked < 500:
            s = random_good_set(rng, min_points=3)
            fulls = full_subsets(s)
            for a, b in itertools.combinations(fulls, 2):
                common = a.intersection(b)
                if common.is_empty() or not is_full(a.union(b)):
                    continue
                assert is_full(common), (a, b)
                checked += 1

    def test_split(self):
        """Test the split contract on 200 random good non-full sets."""
        rng = random.Random(43)
        for _ in range(200):
            s = random_non_full_good_set(rng)
            f = theorem4_split(s)
            rest = f.difference(s)
            assert is_full(f) and is_full(rest)
            assert f.projections() == s.projections()
            assert len(rest) == s.deficiency() - (s.n - 1)


@pytest.mark.slow
class TestSolverProperties:
    """Randomized checks of the solution methods and the boundary contract."""

    def test_round_trip_and_method_equivalence(self):
        """Test that d is recovered from Σᵢuᵢ and the geodesic method agrees, 500 times."""
        rng = random.Random(5)
        for _ in range(500):
            s = random_full_set(rng)
            d = random_decomposition(rng, s.coordinates())
            f = FunctionTable.from_decomposition(s, d)
            base = rng.choice(s.points)
            pins = PinSet({c: d[c] for c in base_pins(base)})
            direct = solve_direct(s, f, pins)
            assert direct.verdict is SolveVerdict.UNIQUE
            assert direct.decomposition == d
            assert solve_via_geodesics(s, f, base, pins).decomposition == d

    def test_linearity(self):
        """Test solve(αf + βg) = α·solve(f) + β·solve(g) under fixed pins."""
        rng = random.Random(8)
        for _ in range(100):
            s = random_full_set(rng)
            pins = PinSet.zeros(base_pins(s[0]))
            f, g = random_function(rng, s), random_function(rng, s)
            alpha, beta = random_rational(rng), random_rational(rng)
            combined = solve_direct(s, f.combine(alpha, g, beta), pins).decomposition
            separate = solve_direct(s, f, pins).decomposition.combine(
                alpha, solve_direct(s, g, pins).decomposition, beta
            )
            assert combined == separate

    def test_boundary_contract(self):
        """Test class hits, uniqueness and minimality of B on 200 random good sets."""
        rng = random.Random(13)
        for _ in range(200):
            s = random_good_set(rng)
            construction = boundary(s)
            b = list(construction.boundary)
            for axis in construction.ei.classes:
                for members in axis:
                    assert len([c for c in b if c in members]) <= 1

            f = random_function(rng, s)
            pins = PinSet({c: random_rational(rng) for c in b})
            report = solve_direct(s, f, pins)
            assert report.verdict is SolveVerdict.UNIQUE
            assert solve_with_boundary(s, f, pins).decomposition == report.decomposition

            for c in b:
                assert solve_direct(s, f, pins.without(c)).verdict is SolveVerdict.UNDERDETERMINED


def small_space(rng):
    """A random space with at most 12 points."""
    while True:
        n = rng.choice((2, 3))
        sizes = [rng.randint(1, 4) for _ in range(n)]
        product = 1
        for size in sizes:
            product *= size
        if product <= 12:
            return Space.from_values([list(range(size)) for size in sizes])


def has_zero_marginal_signed_measure(s):
    """Whether a nonzero signed measure on ``s`` has all marginals zero."""
    columns = s.space.coordinates()
    matrix = sympy.Matrix([[int(p[c.axis] == c.value) for p in s] for c in columns])
    return bool(matrix.nullspace())


@pytest.mark.slow
class TestMeasureAndGraphProperties:
    """Randomized checks of simplicial measures and the two-axis picture."""

    def test_simplicial_matches_brute_force(self):
        """Test is_simplicial against a nullspace computation on 150 measures."""
        rng = random.Random(29)
        for _ in range(150):
            space = small_space(rng)
            universe = list(space.product())
            support = PointSet(space, rng.sample(universe, rng.randint(1, len(universe))))
            raw = {p: rng.randint(1, 5) for p in support}
            total = sum(raw.values())
            m = FiniteMeasure(support, {p: Fraction(w, total) for p, w in raw.items()})

            verdict = is_simplicial(m)
            assert verdict.simplicial == (not has_zero_marginal_signed_measure(support))
            if verdict.simplicial:
                continue
            assert verdict.eps > 0
            for p, n in verdict.perturbation.items():
                assert m[p] + verdict.eps * n >= 0
                assert m[p] - verdict.eps * n >= 0
            reference = [{c: v for c, v in axis.items() if v} for axis in marginals(m)]
            for other in verdict.perturbed_pair(m):
                assert [{c: v for c, v in axis.items() if v} for axis in marginals(other)] == reference

    def test_two_axis_sets(self):
        """Test goodness as acyclicity and components as graph components, n = 2."""
        rng = random.Random(37)
        samples = [random_point_set(rng, n_choices=(2,)) for _ in range(200)]
        samples += [random_good_set(rng, n_choices=(2,)) for _ in range(200)]
        for s in samples:
            graph = nx.Graph()
            for p in s:
                graph.add_edge(("x", p[0]), ("y", p[1]))
            good = is_good(s).good
            assert good == nx.is_forest(graph), s
            if not good:
                continue
            expected = {
                frozenset(p for p in s if ("x", p[0]) in nodes)
                for nodes in nx.connected_components(graph)
            }
            found = {frozenset(component) for component in related_components(s)}
            assert found == expected
