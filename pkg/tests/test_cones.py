"""
Tests for the double description, cone operations and the cone E.
"""

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from quadric_lattices.cones.cone import cone_from_facets, cone_from_rays, dual, face_of
from quadric_lattices.cones.double_description import brute_force_facets, extreme_rays
from quadric_lattices.cones.named import (
    E_dual_generators,
    E_inequalities,
    as_weyl_element,
    cone_E,
    cone_E_dual,
    delta,
    eta_M,
    linear_symmetries,
)
from quadric_lattices.core.constants import Side, Z_EPS_BASIS
from quadric_lattices.lattice.space import make_space
from quadric_lattices.planes.labels import PlaneLabel, canonical
from quadric_lattices.utils.calculations import primitive, rank
from quadric_lattices.utils.exceptions import CapExceededError, ComputationError, ValidationError
from tests.fixtures.expected import E_COUNTS, E_DUAL_COUNTS, W_D5_ORDER

pointed_generators = st.lists(
    st.tuples(st.integers(1, 4), st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)),
    min_size=4,
    max_size=8,
)


def _coords(x):
    return primitive(x.convert(Z_EPS_BASIS).coords)


class TestDoubleDescription:
    @settings(max_examples=60, deadline=None)
    @given(pointed_generators)
    def test_agrees_with_brute_force(self, gens):
        assume(rank([list(g) for g in gens]) == 4)
        cone = cone_from_rays(gens)
        assert sorted(cone.facets) == brute_force_facets(gens, 4)
        assert set(cone.rays) <= {primitive(g) for g in gens}
        assert all(cone.contains(g) for g in gens)

    @settings(max_examples=40, deadline=None)
    @given(pointed_generators)
    def test_both_descriptions_agree(self, gens):
        assume(rank([list(g) for g in gens]) == 4)
        cone = cone_from_rays(gens)
        assert cone_from_facets(cone.facets) == cone

    def test_square_cone(self):
        rays, lineality = extreme_rays([[1, 0, 0], [0, 1, 0], [1, 0, -1], [0, 1, -1]], 3)
        assert lineality == []
        assert len(rays) == 4

    def test_halfspace_has_lineality(self):
        rays, lineality = extreme_rays([[1, 0, 0]], 3)
        assert rays == [(1, 0, 0)]
        assert len(lineality) == 2

    def test_degenerate_cone(self):
        cone = cone_from_rays([(1, 0, 0), (0, 1, 0)])
        assert cone.cone_dim == 2
        assert cone.equations == ((0, 0, 1),)
        assert cone.contains((3, 5, 0))
        assert not cone.contains((1, 1, 1))

    def test_zero_generator_rejected(self):
        with pytest.raises(ValidationError):
            cone_from_rays([(0, 0, 0), (1, 0, 0)])
        with pytest.raises(ValidationError):
            cone_from_rays([])


class TestDuality:
    def test_standard_dual(self):
        cone = cone_from_rays([(1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1)])
        assert dual(dual(cone)) == cone
        assert set(dual(cone).rays) == set(cone.facets)

    def test_face_of_facet(self):
        cone = cone_from_rays([(1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1)])
        normal = cone.facets[0]
        face = face_of(cone, normal)
        assert face.cone_dim == 2
        assert set(face.rays) == set(cone.ray_zero_set(normal))

    def test_face_needs_nonnegative_functional(self):
        cone = cone_from_rays([(1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1)])
        with pytest.raises(ComputationError):
            face_of(cone, tuple(-x for x in cone.facets[0]))


class TestConeE:
    def test_counts_n2(self):
        E = cone_E(2)
        assert (len(E.rays), len(E.facets)) == E_COUNTS[2]
        assert (len(cone_E_dual(2).rays), len(cone_E_dual(2).facets)) == E_DUAL_COUNTS[2]

    @pytest.mark.slow
    def test_counts_n4(self):
        E = cone_E(4)
        assert (len(E.rays), len(E.facets)) == E_COUNTS[4]
        assert (len(cone_E_dual(4).rays), len(cone_E_dual(4).facets)) == E_DUAL_COUNTS[4]

    def test_named_facets(self):
        E = cone_E(2)
        assert {primitive(row) for _, row in E_inequalities(2)} == set(E.facets)

    def test_named_dual_generators(self):
        assert {_coords(g) for _, g in E_dual_generators(2)} == set(cone_E_dual(2).rays)

    def test_bidual(self):
        assert dual(cone_E_dual(2)) == cone_E(2)

    def test_every_plane_is_a_ray(self, Z2):
        E = cone_E(2)
        assert all(E.has_ray(Z2.plane(I)) for I in ({1}, {1, 2}, ()))
        assert E.contains(Z2.eta())
        assert not E.contains(-Z2.eta())

    def test_delta_cuts_out_simplicial_face(self, Z2):
        face = face_of(cone_E(2), delta(PlaneLabel(2, frozenset())))
        assert set(face.rays) == {_coords(Z2.plane({i})) for i in range(1, 6)}

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_delta_and_eta_M_pairings(self, n):
        Z = make_space(n, Side.ZSIDE)
        L = canonical((), n)
        for I in ({1}, {1, 2, 3}):
            assert delta(L).pair(Z.plane(I)) == Fraction(len(I) - 1, 2)
        assert eta_M(L).pair(Z.plane({1, 2})) == 0


class TestSymmetries:
    def test_aut_E_is_W_D5(self, Z2):
        group = linear_symmetries(cone_E(2), Z2.eta())
        assert group.order == W_D5_ORDER

    def test_cap(self, Z2):
        with pytest.raises(CapExceededError):
            linear_symmetries(cone_E(2), Z2.eta(), cap=0)

    def test_as_weyl_element_rejects_scaling(self):
        matrix = tuple(tuple(2 if i == j else 0 for j in range(6)) for i in range(6))
        with pytest.raises(ComputationError):
            as_weyl_element(matrix)
