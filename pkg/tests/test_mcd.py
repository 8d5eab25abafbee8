"""
Tests for divisor classes, the chamber arrangement, walls and the
factorization into flips.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadric_lattices.cones.polytope import H_inequality, eval_H, vertex
from quadric_lattices.core.constants import Side, WallKind, WallSide
from quadric_lattices.lattice.space import make_space
from quadric_lattices.mcd.arrangement import (
    WallDescriptor,
    arrangement,
    chamber_of,
    chamber_of_point,
    coordinate_walls,
    enumerate_chambers,
)
from quadric_lattices.mcd.chamber_report import DELTA_VERTEX, FANO_CHAMBER, chamber_report, region_labels
from quadric_lattices.mcd.divisors import (
    SpecialVariety,
    TraceLocus,
    class_E_I,
    exceptional_trace,
    lift_point,
    radial_project,
    slice_denominator,
    slice_inequality_to_cone,
    special_varieties,
    terminal_counts,
)
from quadric_lattices.mcd.factorization import crossed_flips, factorization, fano_planes
from quadric_lattices.mcd.named_cones import DELTA, DELTA_FANO, DELTA_MOV, DELTA_NEF, box_faces, named_cones
from quadric_lattices.mcd.walls import classify_all, classify_wall, nearest_walls
from quadric_lattices.utils.calculations import dot
from quadric_lattices.utils.exceptions import CapExceededError, NotEffectiveError, ValidationError
from tests.fixtures.expected import ARRANGEMENT_SIZES, N4_FLIPPED_LOCI, N4_TERMINAL, N6_TERMINAL_TOTAL
from tests.fixtures.strategies import subsets_of

slice_points = st.lists(
    st.fractions(min_value=Fraction(-1, 2), max_value=Fraction(1, 2), max_denominator=12),
    min_size=5,
    max_size=5,
)


class TestDivisors:
    def test_singleton_complement_is_E_i(self, X2):
        assert class_E_I({2, 3, 4, 5}, 2) == X2.E(1)

    def test_quadric_through_points(self, X4):
        # 2H - 2(E_1 + E_2) - (E_3 + ... + E_7)
        expected = X4.element([2, -2, -2, -1, -1, -1, -1, -1])
        assert class_E_I({1, 2}, 4) == expected
        assert SpecialVariety(4, frozenset({1, 2}), 1).divisor_class() == expected

    def test_even_complement_rejected(self):
        with pytest.raises(ValidationError, match="odd"):
            class_E_I({1}, 2)

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_projections(self, n):
        X = make_space(n, Side.XSIDE)
        N = n + 3
        assert radial_project(X.anticanonical()) == (0,) * N
        assert radial_project(X.H()) == (Fraction(1, n + 1) - Fraction(1, 2),) * N
        for I in ({1, 2}, set(range(2, N + 1))):
            assert radial_project(class_E_I(I, n)) == vertex(set(range(1, N + 1)) - I, N)

    def test_projection_refuses_bad_input(self, X2, Z2):
        with pytest.raises(ValidationError):
            radial_project(Z2.eta())
        with pytest.raises(ValidationError):
            radial_project(X2.element([1, -3, 0, 0, 0, 0]))

    @settings(max_examples=50, deadline=None)
    @given(slice_points)
    def test_lift_inverts_projection(self, alpha):
        lifted = lift_point(alpha, 2)
        assert slice_denominator(lifted) == 1
        assert radial_project(lifted) == tuple(alpha)

    @settings(max_examples=50, deadline=None)
    @given(slice_points, subsets_of(5))
    def test_cone_functional_matches_slice(self, alpha, I):
        inequality = H_inequality(I, 2, 5)
        functional = slice_inequality_to_cone(inequality, 2)
        value = dot(functional, lift_point(alpha, 2).canonical)
        expected = inequality.evaluate(alpha)
        assert (value > 0) == (expected > 0)
        assert (value == 0) == (expected == 0)


class TestSpecialVarieties:
    def test_validation(self):
        with pytest.raises(ValidationError):
            SpecialVariety(4, frozenset({1, 2, 3}), 1)
        with pytest.raises(ValidationError):
            SpecialVariety(2, frozenset({1, 2, 3}), 0)

    def test_dimension_and_names(self):
        J = SpecialVariety(4, frozenset({1, 2}), 1)
        assert J.dim == 3
        assert J.is_divisorial
        assert J.name() == "J_{{1,2},1}"
        assert J.description() == "join of p_1, p_2 with C"
        assert SpecialVariety(4, frozenset(), 1).description() == "C"

    def test_traces(self):
        J = SpecialVariety(4, frozenset({1, 2}), 1)
        assert exceptional_trace(1, J) == TraceLocus(1, frozenset({2}), 1)
        assert exceptional_trace(3, J) == TraceLocus(3, frozenset({1, 2, 3}), 0)
        assert exceptional_trace(3, SpecialVariety(4, frozenset({1, 2}), 0)) is None

    def test_curves_n4(self):
        curves = special_varieties(4, dim=1)
        assert len(curves) == N4_FLIPPED_LOCI
        assert sum(J.s == 1 for J in curves) == 1

    def test_terminal_counts(self):
        assert terminal_counts(4) == N4_TERMINAL
        assert terminal_counts(6)["total"] == N6_TERMINAL_TOTAL
        assert terminal_counts(2)["total"] == 16


class TestArrangement:
    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_sizes(self, n):
        assert len(arrangement(n)) == ARRANGEMENT_SIZES[n]
        assert len(coordinate_walls(n)) == 2 * (n + 3)

    def test_wall_validation(self):
        with pytest.raises(ValidationError):
            WallDescriptor(4, frozenset({1, 2}), 2)
        with pytest.raises(ValidationError):
            WallDescriptor(4, frozenset({1}), 4)
        with pytest.raises(ValidationError):
            WallDescriptor(4, frozenset({1, 2}), 0, coordinate=True)

    def test_wall_sides(self):
        w = WallDescriptor(2, frozenset({1}), 2)
        point = vertex({2, 3}, 5)
        assert w.value(point) == eval_H({1}, point) - 2
        assert w.inequality(WallSide.ABOVE).evaluate(point) == w.value(point)
        assert w.inequality(WallSide.BELOW).evaluate(point) == -w.value(point)

    def test_coordinate_wall_sides(self):
        lower = WallDescriptor.coordinate_wall(1, 2, upper=False)
        assert lower.inequality(WallSide.ABOVE).evaluate((0,) * 5) == Fraction(1, 2)
        assert lower.inequality(WallSide.BELOW).evaluate((0,) * 5) == -Fraction(1, 2)
        assert lower.label() == "alpha_1 = -1/2"

    def test_anticanonical_chamber(self, X2):
        chamber = chamber_of(X2.anticanonical())
        assert chamber.is_full_dimensional
        assert chamber.signs.count(1) == len(arrangement(2))
        assert chamber.walls_through() == []

    def test_point_on_wall(self):
        point = (Fraction(7, 24), Fraction(-1, 10), Fraction(-1, 20), Fraction(-1, 30), Fraction(-1, 40))
        chamber = chamber_of_point(point, 2)
        assert [w.label() for w in chamber.walls_through()] == ["H_{1} = 2"]
        origin = chamber_of_point((0,) * 5, 2)
        assert [w.label() for w in chamber.separating_walls(origin)] == ["H_{1} = 2"]

    def test_not_effective(self, X2):
        with pytest.raises(NotEffectiveError):
            chamber_of(-X2.H())
        with pytest.raises(NotEffectiveError):
            chamber_of_point(vertex((), 5), 2)

    def test_surface_has_one_movable_chamber(self):
        chambers = enumerate_chambers(2)
        assert len({c.descriptor.signs for c in chambers}) == len(chambers)
        assert sum(c.in_movable for c in chambers) == 1

    def test_enumeration_cap(self):
        with pytest.raises(CapExceededError):
            enumerate_chambers(4)


class TestNamedCones:
    def test_surface_polytopes_agree(self):
        polytopes = named_cones(2)
        assert polytopes[DELTA_NEF].vertices == polytopes[DELTA_MOV].vertices
        assert polytopes[DELTA_FANO].vertices == polytopes[DELTA_MOV].vertices
        assert polytopes[DELTA_MOV].is_subset_of(polytopes[DELTA])

    @pytest.mark.slow
    def test_nesting_n4(self):
        polytopes = named_cones(4)
        assert polytopes[DELTA_NEF].is_subset_of(polytopes[DELTA_MOV])
        assert polytopes[DELTA_FANO].is_subset_of(polytopes[DELTA_MOV])
        assert polytopes[DELTA_FANO].is_interior((0,) * 7)
        assert not polytopes[DELTA_NEF].is_interior((0,) * 7)

    def test_box_faces_touch_surface_polytope_in_one_vertex(self):
        faces = box_faces(2)
        assert len(faces) == 10
        for k, (q, on_face) in enumerate(faces):
            i, value = k // 2, Fraction(1, 2) if k % 2 else Fraction(-1, 2)
            assert on_face == [tuple(value if j == i else Fraction(0) for j in range(5))]
            assert q.homogenized() not in named_cones(2)[DELTA_MOV].facet_set

    @pytest.mark.slow
    def test_box_faces_are_facets_n4(self):
        mov = named_cones(4)[DELTA_MOV]
        for q, on_face in box_faces(4):
            assert q.homogenized() in mov.facet_set
            assert len(on_face) >= 7

    def test_x_cone_contains_anticanonical(self, X2):
        cone = named_cones(2).x_cone(DELTA_MOV)
        assert cone.contains(X2.anticanonical())
        assert cone.contains(X2.H())
        assert not cone.contains(X2.E(1))


class TestWalls:
    def test_kinds_n2(self):
        kinds = [r.kind for r in classify_all(2)]
        assert kinds.count(WallKind.FIBER_TYPE) == 10
        assert kinds.count(WallKind.DIVISORIAL) == 16
        assert kinds.count(WallKind.FLIP) == 0

    @pytest.mark.slow
    def test_kinds_n4(self):
        kinds = [r.kind for r in classify_all(4)]
        assert kinds.count(WallKind.FIBER_TYPE) == 14
        assert kinds.count(WallKind.DIVISORIAL) == 64
        assert kinds.count(WallKind.FLIP) == 64

    def test_divisorial(self, X2):
        report = classify_wall(WallDescriptor(2, frozenset({1}), 2), 2)
        assert report.exceptional == X2.E(1)
        assert report.loci[0]["exceptional"] == "E_1"

    def test_fiber_type(self):
        report = classify_wall(WallDescriptor.coordinate_wall(3, 2, upper=False), 2)
        assert report.kind == WallKind.FIBER_TYPE
        assert "line through p_3" in report.fiber

    @pytest.mark.slow
    def test_flip_of_rational_normal_curve(self):
        report = classify_wall(WallDescriptor(4, frozenset(), 3), 4)
        assert report.kind == WallKind.FLIP
        assert report.flipped_dims == (1, 2)
        assert report.nef_side == WallSide.BELOW
        assert report.locus == SpecialVariety(4, frozenset(), 1)

    def test_nearest_walls_from_origin(self):
        nearest = nearest_walls((0,) * 5, 2, count=3)
        assert len(nearest) == 3
        assert all(d == Fraction(1, 20) for _, d in nearest)
        assert all(not w.coordinate for w, _ in nearest)

    def test_nearest_walls_skip_excluded(self):
        first = nearest_walls((0,) * 5, 2, count=1)[0][0]
        rest = nearest_walls((0,) * 5, 2, count=3, exclude=[first])
        assert first not in [w for w, _ in rest]
        assert len(rest) == 3


class TestFactorization:
    def test_surface_is_empty(self):
        report = factorization(2)
        assert report.steps == ()
        assert report.loci_count == 0

    def test_n4(self):
        report = factorization(4)
        assert len(report.steps) == 1
        assert report.loci_count == N4_FLIPPED_LOCI
        assert report.counts == N4_TERMINAL

    @pytest.mark.slow
    def test_crossed_flips_n4(self):
        crossed = crossed_flips(4)
        assert list(crossed) == [1]
        assert set(crossed[1]) == set(factorization(4).steps[0].flipped)

    @pytest.mark.parametrize("n", [2, 4])
    def test_fano_planes(self, n):
        rows = fano_planes(n)
        assert len(rows) == 2 ** (n + 2)
        assert sum(strict for _, _, strict in rows) == terminal_counts(n)["m_dimensional"]
        assert all(J.dim == n // 2 for _, J, strict in rows if strict)
        assert all(J.dim == n // 2 - 1 for _, J, strict in rows if not strict)


class TestChamberReport:
    def test_anticanonical_in_fano_chamber(self, X2):
        report = chamber_report(X2.anticanonical())
        assert FANO_CHAMBER in report["regions"]
        assert report["full_dimensional"]
        assert report["walls_through"] == []
        assert len(report["nearest_walls"]) == 3

    def test_E1_is_vertex(self, X2):
        assert DELTA_VERTEX in region_labels(radial_project(X2.E(1)), 2)

    def test_H_on_nef_boundary(self, X2):
        labels = region_labels(radial_project(X2.H()), 2)
        assert f"boundary of {DELTA_NEF}" in labels

    def test_refuses_Z_classes(self, Z2):
        with pytest.raises(ValidationError):
            chamber_report(Z2.eta())

    def test_serialized_with_rational_pairs(self, X2):
        x = X2.element([1, -1, 0, 0, 0, 0])
        report = chamber_report(x)
        assert report["class"] == {"space": {"n": 2, "side": "X"}, "basis": "H_E",
                                   "coords": [[1, 1], [-1, 1], [0, 1], [0, 1], [0, 1], [0, 1]]}
        assert report["alpha"][0] == [-1, 2]
        assert all(len(pair) == 2 for pair in report["alpha"])
        assert all(len(w["distance_squared"]) == 2 for w in report["nearest_walls"])

    def test_walls_through_are_not_repeated_as_nearest(self, X2):
        report = chamber_report(X2.E(1))
        through = {w["wall"] for w in report["walls_through"]}
        assert through
        assert len(report["nearest_walls"]) == 3
        assert through.isdisjoint(w["wall"] for w in report["nearest_walls"])
