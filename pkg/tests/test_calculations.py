"""
Tests for validators and exact arithmetic helpers.
"""

from fractions import Fraction

import pytest
import sympy

from quadric_lattices.core.validators import (
    validate_even_dimension,
    validate_index,
    validate_subset,
)
from quadric_lattices.utils.calculations import (
    integer_nullspace,
    inverse,
    primitive,
    primitive_line,
    rational_pair,
    rank,
    subsets,
    to_fraction,
)
from quadric_lattices.utils.exceptions import ValidationError


class TestValidators:
    @pytest.mark.parametrize("n", [2, 4, 6, 8])
    def test_even_dimensions_accepted(self, n):
        validate_even_dimension(n)

    @pytest.mark.parametrize("n", [0, 1, 3, -2, 2.0, True, "4"])
    def test_bad_dimensions_rejected(self, n):
        with pytest.raises(ValidationError):
            validate_even_dimension(n)

    def test_index_range(self):
        validate_index(5, 5)
        with pytest.raises(ValidationError):
            validate_index(6, 5)
        with pytest.raises(ValidationError):
            validate_index(0, 5)

    def test_subset_is_frozen(self):
        assert validate_subset([1, 3, 3], 5) == frozenset({1, 3})
        with pytest.raises(ValidationError):
            validate_subset([1, 9], 5)


class TestFractions:
    def test_conversions(self):
        assert to_fraction(3) == Fraction(3)
        assert to_fraction("-1/2") == Fraction(-1, 2)
        assert to_fraction(sympy.Rational(3, 4)) == Fraction(3, 4)

    def test_rational_pair(self):
        assert rational_pair(Fraction(-2, 4)) == [-1, 2]
        assert rational_pair(3) == [3, 1]

    @pytest.mark.parametrize("value", [0.5, True, "x", None])
    def test_inexact_values_refused(self, value):
        with pytest.raises(ValidationError):
            to_fraction(value)


class TestPrimitive:
    def test_clears_denominators_and_gcd(self):
        assert primitive([Fraction(1, 4), Fraction(1, 2), Fraction(-1, 2)]) == (1, 2, -2)
        assert primitive([4, 6, 0]) == (2, 3, 0)

    def test_sign_is_kept(self):
        assert primitive([-2, 4]) == (-1, 2)
        assert primitive_line([-2, 4]) == (1, -2)

    def test_zero_vector(self):
        with pytest.raises(ValidationError):
            primitive([0, 0])


class TestLinearAlgebra:
    def test_inverse(self):
        m = ((Fraction(2), Fraction(1)), (Fraction(1), Fraction(1)))
        assert inverse(m) == ((1, -1), (-1, 2))

    def test_singular(self):
        with pytest.raises(ValidationError):
            inverse(((1, 2), (2, 4)))

    def test_rank_and_nullspace(self):
        rows = [[1, 1, 0], [0, 1, 1]]
        assert rank(rows) == 2
        assert rank([]) == 0
        (v,) = integer_nullspace(rows, 3)
        assert primitive_line(v) == (1, -1, 1)

    def test_subsets_order(self):
        listed = list(subsets(3))
        assert len(listed) == 8
        assert listed[0] == frozenset()
        assert listed[-1] == frozenset({1, 2, 3})
        assert [len(s) for s in listed] == sorted(len(s) for s in listed)
