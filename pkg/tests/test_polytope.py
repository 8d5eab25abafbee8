"""
Tests for slice polytopes, the functions H_I and the demihypercube.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from quadric_lattices.cones.polytope import (
    AffinePolytope,
    H_inequality,
    coordinate_inequality,
    demihypercube,
    demihypercube_inequalities,
    eval_H,
    vertex,
)
from quadric_lattices.utils.exceptions import ComputationError, ValidationError
from tests.fixtures.expected import DEMIHYPERCUBE_COUNTS
from tests.fixtures.strategies import subsets_of


class TestH:
    def test_origin(self):
        assert eval_H((), (0,) * 7) == Fraction(7, 2)
        assert eval_H({1, 2}, (0,) * 7) == Fraction(7, 2)

    @settings(max_examples=80, deadline=None)
    @given(subsets_of(5), subsets_of(5))
    def test_vertices_count_differences(self, I, J):
        assert eval_H(I, vertex(J, 5)) == len(I ^ J)

    def test_inequality_directions(self):
        point = vertex({1}, 5)
        above = H_inequality({1, 2}, 1, 5)
        below = H_inequality({1, 2}, 1, 5, above=False)
        assert above.evaluate(point) == 0
        assert below.evaluate(point) == 0
        assert above.evaluate(vertex({3}, 5)) == 2
        assert below.evaluate(vertex({3}, 5)) == -2
        assert above.label == "H_{1,2} >= 1"

    def test_coordinate_bounds(self):
        upper = coordinate_inequality(2, 3, upper=True)
        assert upper.evaluate((0, Fraction(1, 2), 0)) == 0
        assert upper.evaluate((0, 1, 0)) < 0


class TestAffinePolytope:
    def test_square(self):
        square = AffinePolytope.from_inequalities(
            [coordinate_inequality(i, 2, upper) for i in (1, 2) for upper in (True, False)]
        )
        assert len(square.vertices) == 4
        assert square.centroid() == (0, 0)
        assert square.is_interior((0, 0))
        assert square.contains((Fraction(1, 2), 0))
        assert not square.is_interior((Fraction(1, 2), 0))
        assert not square.contains((1, 0))

    def test_hull_and_subset(self):
        triangle = AffinePolytope.from_vertices([(0, 0), (1, 0), (0, 1)])
        square = AffinePolytope.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])
        assert len(triangle.inequalities) == 3
        assert triangle.is_subset_of(square)
        assert not square.is_subset_of(triangle)

    def test_empty_rejected(self):
        with pytest.raises(ComputationError):
            AffinePolytope.from_inequalities([
                coordinate_inequality(1, 1, upper=True),
                H_inequality((), 3, 1),
            ])

    def test_dataframe(self):
        square = AffinePolytope.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])
        frame = square.to_dataframe()
        assert list(frame.columns) == ["label", "normal", "vertices_on_facet"]
        assert (frame["vertices_on_facet"] == 2).all()


class TestDemihypercube:
    def test_counts_N5(self):
        polytope = demihypercube(5)
        assert (len(polytope.vertices), len(polytope.inequalities)) == DEMIHYPERCUBE_COUNTS[5]
        assert polytope.matches(demihypercube_inequalities(5))
        assert all(q.label for q in polytope.inequalities)

    @pytest.mark.slow
    @pytest.mark.parametrize("N", [7, 9])
    def test_counts_slow(self, N):
        polytope = demihypercube(N)
        assert (len(polytope.vertices), len(polytope.inequalities)) == DEMIHYPERCUBE_COUNTS[N]
        assert polytope.matches(demihypercube_inequalities(N))

    def test_origin_is_interior(self):
        assert demihypercube(5).is_interior((0,) * 5)
        assert not demihypercube(5).contains(vertex((), 5))

    def test_small_N_rejected(self):
        with pytest.raises(ValidationError):
            demihypercube(3)
