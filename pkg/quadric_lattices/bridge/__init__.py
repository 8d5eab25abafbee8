"""The variety G of planes and its dictionary with X."""

from quadric_lattices.bridge.automorphisms import AutBounds, aut_bounds
from quadric_lattices.bridge.classes import (
    CurveClass,
    DivisorClass,
    alpha_inv,
    anticanonical_G,
    beta_class,
    class_H_M,
    curve_class,
    exceptional_divisors,
    fiber_contraction_divisor,
)
from quadric_lattices.bridge.g_cones import G_cones, GCones, contraction_face, face_labels, simplicial_facets
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

__all__ = [
    "AutBounds",
    "CurveClass",
    "DivisorClass",
    "GCones",
    "G_cones",
    "LatticeMap",
    "alpha_inv",
    "anticanonical_G",
    "aut_bounds",
    "beta_class",
    "class_H_M",
    "classify_pseudo_iso",
    "conjugate_to_Z",
    "contraction_face",
    "cremona_pullback",
    "curve_class",
    "exceptional_divisors",
    "face_labels",
    "fiber_contraction_divisor",
    "h_tilde",
    "relabel",
    "restricted_form_scale",
    "simplicial_facets",
    "weyl_map",
]
