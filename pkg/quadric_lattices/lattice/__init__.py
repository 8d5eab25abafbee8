"""Quadratic lattices package."""

from quadric_lattices.lattice.lattice_class import LatticeClass
from quadric_lattices.lattice.space import LatticeSpace, convert, is_integral, make_space, pair

__all__ = ["LatticeClass", "LatticeSpace", "convert", "is_integral", "make_space", "pair"]
