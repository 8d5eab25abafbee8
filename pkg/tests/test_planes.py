"""
Tests for plane labels, incidences and families.
"""

import pytest
from hypothesis import given, settings

from quadric_lattices.core.constants import Family
from quadric_lattices.planes.labels import (
    PlaneLabel,
    all_labels,
    canonical,
    family_parity,
    intersection_dim,
    plane_class,
    planes_in_divisor,
)
from quadric_lattices.utils.exceptions import ValidationError
from quadric_lattices.weyl.element import act, sigma
from tests.fixtures.expected import N4_PLANES_IN_DIVISOR
from tests.fixtures.strategies import labels, subsets_of


class TestLabels:
    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_label_count(self, n):
        found = all_labels(n)
        assert len(found) == len(set(found)) == 2 ** (n + 2)

    def test_canonical_takes_small_side(self):
        assert canonical({1, 2, 3, 4}, 2).rep == frozenset({5})
        assert canonical({1, 2}, 2).rep == frozenset({1, 2})
        assert canonical({1, 2, 3, 4}, 4) == canonical({5, 6, 7}, 4)

    def test_oversized_rep_rejected(self):
        with pytest.raises(ValidationError, match="canonical"):
            PlaneLabel(2, frozenset({1, 2, 3}))

    def test_names(self):
        label = canonical({3, 1}, 4)
        assert label.name() == "{1,3}"
        assert repr(label) == "M_{1,3}"
        assert label.to_list() == [1, 3]

    @settings(max_examples=60, deadline=None)
    @given(labels(4), subsets_of(7))
    def test_flip_matches_group_action(self, label, I):
        image = act(sigma(I, 7), plane_class(label))
        assert image == plane_class(label.flipped(I))

    @settings(max_examples=60, deadline=None)
    @given(labels(4))
    def test_even_rep(self, label):
        assert len(label.even_rep) % 2 == 0
        assert canonical(label.even_rep, 4) == label


class TestIncidence:
    def test_self_and_neighbours(self):
        base = canonical((), 4)
        assert intersection_dim(base, base) == 2
        assert intersection_dim(base, canonical({1}, 4)) == 1
        assert intersection_dim(base, canonical({1, 2}, 4)) == 0
        assert intersection_dim(base, canonical({1, 2, 3}, 4)) == -1

    def test_symmetric_difference_uses_complement(self):
        assert intersection_dim(canonical((), 4), canonical({1, 2, 3, 4, 5, 6}, 4)) == 1

    @settings(max_examples=60, deadline=None)
    @given(labels(4), labels(4))
    def test_symmetric(self, a, b):
        assert intersection_dim(a, b) == intersection_dim(b, a)

    def test_mixed_dimensions_rejected(self):
        with pytest.raises(ValidationError):
            intersection_dim(canonical((), 2), canonical((), 4))


class TestFamilies:
    @pytest.mark.parametrize("n", [2, 4])
    def test_base_plane_in_psi(self, n):
        base = canonical((), n)
        assert all(family_parity(i, base) == Family.T_PSI for i in range(1, n + 4))

    def test_single_flip_changes_family(self):
        label = canonical({2}, 4)
        assert family_parity(1, label) == Family.T_PHI
        assert family_parity(2, label) == Family.T_PSI

    def test_pair_flip_keeps_family(self):
        label = canonical({1, 2}, 4)
        assert family_parity(3, label) == Family.T_PSI


class TestDivisorPlanes:
    def test_count_n4(self):
        found = planes_in_divisor(canonical((), 4))
        assert len(found) == N4_PLANES_IN_DIVISOR
        assert all(len(label.rep) == 1 for label in found)

    def test_n2_only_the_plane_itself(self):
        base = canonical({1}, 2)
        assert planes_in_divisor(base) == [base]

    def test_n6_flips(self):
        found = planes_in_divisor(canonical((), 6))
        # |I| in {0, 2} for m = 3
        assert len(found) == 1 + 36
