"""Rational cones and polytopes package."""

from quadric_lattices.cones.cone import (
    RationalCone,
    cone_from_facets,
    cone_from_rays,
    dual,
    face_of,
    membership,
)
from quadric_lattices.cones.double_description import brute_force_facets, extreme_rays
from quadric_lattices.cones.named import cone_E, cone_E_dual, linear_symmetries
from quadric_lattices.cones.polytope import AffinePolytope, SliceInequality, demihypercube, eval_H

__all__ = [
    "AffinePolytope",
    "RationalCone",
    "SliceInequality",
    "brute_force_facets",
    "cone_E",
    "cone_E_dual",
    "cone_from_facets",
    "cone_from_rays",
    "demihypercube",
    "dual",
    "eval_H",
    "extreme_rays",
    "face_of",
    "linear_symmetries",
    "membership",
]
