"""
Tests for the maps between the two lattices, classes and cones on G, and
the pseudo-isomorphism classifier.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadric_lattices.bridge.automorphisms import aut_bounds, preserves_G_structure
from quadric_lattices.bridge.classes import (
    DivisorClass,
    anticanonical_G,
    beta_class,
    class_H_M,
    curve_class,
    exceptional_divisors,
)
from quadric_lattices.bridge.g_cones import (
    EFF,
    MOV1,
    MOV1_DUAL,
    MOV_1,
    NE,
    NEF,
    G_cones,
    contraction_face,
    face_labels,
    simplicial_facets,
)
from quadric_lattices.bridge.maps import (
    LatticeMap,
    conjugate_to_Z,
    cremona_pullback,
    h_tilde,
    relabel,
    restricted_form_scale,
    weyl_map,
)
from quadric_lattices.bridge.pseudo_iso import classify_pseudo_iso
from quadric_lattices.core.constants import CurveKind, Family, Side
from quadric_lattices.lattice.space import make_space
from quadric_lattices.planes.labels import canonical, family_parity, plane_class
from quadric_lattices.utils.exceptions import NotPseudoIsomorphismError, ValidationError
from quadric_lattices.weyl.element import WeylElement, sigma
from tests.fixtures.strategies import subsets_of


class TestMaps:
    @pytest.mark.parametrize("n", [2, 4])
    def test_h_tilde_images(self, n):
        X = make_space(n, Side.XSIDE)
        Z = make_space(n, Side.ZSIDE)
        L = canonical({1, 2}, n)
        h = h_tilde(L)
        assert h(X.anticanonical()) == Z.eta()
        for i in range(1, n + 4):
            assert h(X.E(i)) == plane_class(L.flipped({i}))

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_restricted_form_scale(self, n):
        assert restricted_form_scale(canonical((), n)) == -((-1) ** (n // 2))

    def test_H_goes_to_H_M(self, X4):
        L = canonical((), 4)
        assert h_tilde(L)(X4.H()) == class_H_M(L).vector

    def test_inverse_and_identity(self):
        h = h_tilde(canonical({3}, 2))
        assert h.inverse().compose(h).is_identity()
        assert h.compose(h.inverse()).is_identity()

    def test_bad_matrix_shape(self, X2, Z2):
        with pytest.raises(ValidationError):
            LatticeMap(X2, Z2, ((1, 0),), "H_E", "eta_eps")


class TestCremona:
    @pytest.mark.parametrize("n", [2, 4])
    def test_fixes_anticanonical_and_is_involution(self, n):
        X = make_space(n, Side.XSIDE)
        omega = cremona_pullback(1, 2, n)
        assert omega(X.anticanonical()) == X.anticanonical()
        assert omega.compose(omega).is_identity()

    def test_isometry(self, X2):
        omega = cremona_pullback(2, 4, 2)
        classes = [X2.H(), X2.E(1), X2.E(2), X2.E(3)]
        for a in classes:
            for b in classes:
                assert omega(a).pair(omega(b)) == a.pair(b)

    def test_surface_formula(self, X2):
        # on a surface E_3 goes to the line through p_4 and p_5
        omega = cremona_pullback(1, 2, 2)
        assert omega(X2.E(3)) == X2.H() - X2.E(4) - X2.E(5)

    @pytest.mark.parametrize("rep", [(), (1, 2), (3,)])
    def test_conjugate_is_sign_change(self, rep):
        L = canonical(rep, 4)
        conjugate = conjugate_to_Z(cremona_pullback(2, 5, 4), L)
        assert conjugate == weyl_map(sigma({2, 5}, 7), 4)

    def test_same_index_rejected(self):
        with pytest.raises(ValidationError):
            cremona_pullback(3, 3, 2)


class TestPseudoIsomorphisms:
    @settings(max_examples=40, deadline=None)
    @given(subsets_of(5), st.permutations([1, 2, 3, 4, 5]))
    def test_round_trip(self, I, kappa):
        h0 = h_tilde(canonical((), 2))
        f = weyl_map(sigma(I, 5), 2).compose(h0).compose(relabel(kappa, 2))
        label, found = classify_pseudo_iso(f, 2)
        assert label == canonical(I, 2)
        assert found == tuple(kappa)

    def test_h_tilde_is_its_own_label(self):
        L = canonical({1, 4}, 4)
        assert classify_pseudo_iso(h_tilde(L), 4) == (L, tuple(range(1, 8)))

    def test_wrong_spaces_rejected(self):
        with pytest.raises(NotPseudoIsomorphismError):
            classify_pseudo_iso(relabel((2, 1, 3, 4, 5), 2), 2)

    def test_scaled_map_rejected(self):
        h0 = h_tilde(canonical((), 2))
        doubled = tuple(tuple(2 * x for x in row) for row in h0.matrix)
        f = LatticeMap(h0.source, h0.target, doubled, h0.source_basis, h0.target_basis)
        with pytest.raises(NotPseudoIsomorphismError):
            classify_pseudo_iso(f, 2)

    def test_bad_relabel(self):
        with pytest.raises(ValidationError):
            relabel((1, 1, 2, 3, 4), 2)


class TestClasses:
    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_curve_pairings(self, n):
        L = canonical({1}, n)
        K = anticanonical_G(n)
        d = curve_class(CurveKind.ANTICANONICAL, L)
        e = curve_class(CurveKind.EXCEPTIONAL_LINE, L)
        c = curve_class(CurveKind.ELLIPTIC, n=n)
        assert K.dot(d) == n + 1
        assert all(D.dot(d) == 0 for D in exceptional_divisors(L))
        assert beta_class(L).dot(e) == -1
        assert K.dot(c) == 4
        assert beta_class(L).dot(c) == 1

    def test_fibers_are_half_eta_minus_eps(self, Z2):
        phi = curve_class(CurveKind.PHI_FIBER, i=2, n=2)
        psi = curve_class(CurveKind.PSI_FIBER, i=2, n=2)
        assert phi.vector == Z2.eta() * Fraction(1, 2) - Z2.eps(2)
        assert (phi + psi).vector == Z2.eta()

    def test_missing_arguments(self):
        with pytest.raises(ValidationError):
            curve_class(CurveKind.LINE)
        with pytest.raises(ValidationError):
            curve_class(CurveKind.PHI_FIBER, n=2)

    def test_divisors_pair_with_curves_only(self):
        L = canonical((), 2)
        with pytest.raises(ValidationError):
            beta_class(L).dot(beta_class(L))

    def test_x_side_vector_rejected(self, X2):
        with pytest.raises(ValidationError):
            DivisorClass(X2.H())


class TestGCones:
    def test_surface_counts(self):
        cones = G_cones(2)
        assert cones.ray_counts() == {NE: 16, NEF: 26, EFF: 16, MOV_1: 26, MOV1: 26, MOV1_DUAL: 16}
        assert cones[MOV1] == cones[NEF]
        assert all(len(cones.inventories[name]) == len(cones[name].rays) for name in cones.cones)

    @pytest.mark.slow
    def test_nef_count_n4(self):
        assert len(G_cones(4)[NEF].rays) == 78

    def test_simplicial_facets(self):
        facets = simplicial_facets(2)
        assert len(facets) == 16
        assert all(len(labels) == 5 for labels in facets)

    @pytest.mark.parametrize("family", [Family.T_PHI, Family.T_PSI])
    def test_contraction_faces(self, family):
        labels = face_labels(contraction_face(family, 1, 2))
        assert len(labels) == 8
        assert {family_parity(1, L) for L in labels} == {family}


class TestAutomorphisms:
    def test_bounds_n2(self):
        report = aut_bounds(2)
        assert report.passed
        assert (report.lower, report.upper, report.checked) == (16, 1920, 16)
        assert "general" in report.to_dict()["note"]

    def test_permutations_also_preserve(self):
        verdict = preserves_G_structure(WeylElement.transposition(1, 2, 5), 2)
        assert verdict == {"anticanonical": True, "Eff": True, "Nef": True}
