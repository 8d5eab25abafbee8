"""Plane labels package."""

from quadric_lattices.planes.labels import (
    PlaneLabel,
    all_labels,
    canonical,
    family_parity,
    intersection_dim,
    plane_class,
    planes_in_divisor,
)

__all__ = [
    "PlaneLabel",
    "all_labels",
    "canonical",
    "family_parity",
    "intersection_dim",
    "plane_class",
    "planes_in_divisor",
]
