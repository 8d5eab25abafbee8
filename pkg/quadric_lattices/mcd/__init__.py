"""Mori chamber decomposition of the blow-up X package."""

from quadric_lattices.mcd.arrangement import (
    ChamberDescriptor,
    WallDescriptor,
    arrangement,
    chamber_of,
    chamber_of_point,
    coordinate_walls,
    enumerate_chambers,
)
from quadric_lattices.mcd.chamber_report import chamber_report
from quadric_lattices.mcd.divisors import (
    SpecialVariety,
    class_E_I,
    exceptional_trace,
    lift_point,
    radial_project,
    slice_inequality_to_cone,
    special_varieties,
    terminal_counts,
)
from quadric_lattices.mcd.factorization import crossed_flips, factorization, fano_planes
from quadric_lattices.mcd.named_cones import named_cones
from quadric_lattices.mcd.walls import WallReport, classify_all, classify_wall

__all__ = [
    "ChamberDescriptor",
    "SpecialVariety",
    "WallDescriptor",
    "WallReport",
    "arrangement",
    "chamber_of",
    "chamber_of_point",
    "chamber_report",
    "class_E_I",
    "classify_all",
    "classify_wall",
    "coordinate_walls",
    "crossed_flips",
    "enumerate_chambers",
    "exceptional_trace",
    "factorization",
    "fano_planes",
    "lift_point",
    "named_cones",
    "radial_project",
    "slice_inequality_to_cone",
    "special_varieties",
    "terminal_counts",
]
