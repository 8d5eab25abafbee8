"""
Tests for lattice spaces and classes.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from quadric_lattices.core.constants import (
    Side,
    X_ANTICANONICAL_BASIS,
    X_EPS_TILDE_BASIS,
    X_STANDARD_BASIS,
    Z_EPS_BASIS,
    Z_PLANES_BASIS,
)
from quadric_lattices.lattice.lattice_class import LatticeClass
from quadric_lattices.lattice.space import make_space, pair
from quadric_lattices.utils.calculations import subsets
from quadric_lattices.utils.exceptions import ValidationError
from tests.fixtures.expected import PLANE_SQUARES
from tests.fixtures.strategies import rational_vectors

HALF = Fraction(1, 2)


class TestForms:
    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_Z_gram(self, n):
        Z = make_space(n, Side.ZSIDE)
        gram = Z.gram()
        t = (-1) ** (n // 2)
        assert gram[0][0] == 4
        assert all(gram[i][i] == t for i in range(1, n + 4))
        assert all(gram[i][j] == 0 for i in range(n + 4) for j in range(n + 4) if i != j)

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_anticanonical_square(self, n):
        X = make_space(n, Side.XSIDE)
        K = X.anticanonical()
        assert K.pair(K) == 4 * (n - 1)
        assert list(K.convert(X_ANTICANONICAL_BASIS).coords) == [1] + [0] * (n + 3)

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_plane_squares_and_eta(self, n):
        Z = make_space(n, Side.ZSIDE)
        for I in subsets(n + 3):
            M = Z.plane(I)
            assert M.pair(M) == PLANE_SQUARES[n]
            assert Z.eta().pair(M) == 1

    def test_eps_tilde_square(self, X2):
        # eps~_i are orthogonal to -K_X with square -1
        for i in range(1, 6):
            e = X2.eps_tilde(i)
            assert e.pair(X2.anticanonical()) == 0
            assert e.pair(e) == -1


class TestPlanes:
    def test_complement_gives_same_class(self, Z4):
        assert Z4.plane({1, 2}) == Z4.plane({3, 4, 5, 6, 7})

    def test_eta_identity(self, Z2):
        total = Z2.plane({3}) + Z2.plane({1, 3}) + Z2.plane({2, 3}) + Z2.plane({1, 2, 3})
        assert total == Z2.eta()

    def test_eps_from_planes(self, Z4):
        for i in range(1, 8):
            assert Z4.eps(i) == Z4.plane(()) + Z4.plane({i}) - Z4.eta() * HALF

    def test_planes_basis_is_eta_and_singletons(self, Z2):
        x = Z2.element([1, 0, 0, 0, 0, 1], Z_PLANES_BASIS)
        assert x == Z2.eta() + Z2.plane({5})


class TestConversion:
    @settings(max_examples=40, deadline=None)
    @given(rational_vectors(6))
    def test_round_trip_Z(self, coords):
        Z = make_space(2, Side.ZSIDE)
        x = Z.element(coords)
        for basis in (Z_EPS_BASIS, Z_PLANES_BASIS):
            assert x.convert(basis).convert(Z_EPS_BASIS).coords == x.coords

    @settings(max_examples=40, deadline=None)
    @given(rational_vectors(6), rational_vectors(6))
    def test_pairing_basis_independent(self, a, b):
        X = make_space(2, Side.XSIDE)
        x, y = X.element(a), X.element(b)
        value = pair(x, y)
        assert value == pair(y, x)
        for basis in (X_ANTICANONICAL_BASIS, X_EPS_TILDE_BASIS):
            assert pair(x.convert(basis), y) == value

    @settings(max_examples=40, deadline=None)
    @given(rational_vectors(6), rational_vectors(6))
    def test_bilinear(self, a, b):
        Z = make_space(2, Side.ZSIDE)
        x, y, w = Z.element(a), Z.element(b), Z.plane({1})
        assert (x + y * 3).pair(w) == x.pair(w) + 3 * y.pair(w)

    def test_serialisation(self, X2):
        x = X2.anticanonical().convert(X_EPS_TILDE_BASIS)
        assert LatticeClass.from_dict(x.to_dict()) == x


class TestErrors:
    def test_unknown_basis(self, Z2):
        with pytest.raises(ValidationError, match="Unknown basis"):
            Z2.element([0] * 6, X_STANDARD_BASIS)

    def test_wrong_length(self, Z2):
        with pytest.raises(ValidationError):
            Z2.element([0] * 5)

    def test_mixed_spaces(self, Z2, Z4):
        with pytest.raises(ValidationError):
            Z2.eta() + Z4.eta()

    def test_side_specific_constructors(self, Z2, X2):
        with pytest.raises(ValidationError):
            X2.eta()
        with pytest.raises(ValidationError):
            Z2.H()


class TestIntegrality:
    @pytest.mark.parametrize("n", [2, 4])
    def test_examples(self, n):
        Z = make_space(n, Side.ZSIDE)
        assert Z.is_integral(Z.eta())
        assert not Z.is_integral(Z.eta() * HALF)
        assert Z.is_integral(Z.eps(1) + Z.eps(2))
        assert Z.is_integral(Z.plane({1, 2}))

    @pytest.mark.parametrize("n", [2, 4])
    def test_unimodular(self, n):
        Z = make_space(n, Side.ZSIDE)
        det = Z.lattice_determinant()
        assert abs(det) == 1
        assert det == (-1) ** (n // 2)
