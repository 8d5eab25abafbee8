"""
Classification of the walls met in the Mori chamber decomposition of X.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from quadric_lattices.core.constants import WallKind, WallSide
from quadric_lattices.lattice.lattice_class import LatticeClass
from quadric_lattices.mcd.arrangement import WallDescriptor, arrangement, coordinate_walls
from quadric_lattices.mcd.divisors import SpecialVariety, class_E_I
from quadric_lattices.mcd.named_cones import DELTA_NEF, named_cones
from quadric_lattices.utils.calculations import Vector, rational_pair, sorted_subset
from quadric_lattices.utils.exceptions import ComputationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WallReport:
    """
    Outcome of crossing one wall.

    Attributes:
        wall: The classified hyperplane
        kind: Fiber type, divisorial or flip
        exceptional: Class of the contracted divisor (divisorial walls)
        flipped_dims: Dimensions of the projective spaces exchanged (flips)
        locus: Special variety flipped on the Nef side of the wall (flips)
        nef_side: Side of the wall containing Delta_Nef (flips)
        fiber: General fiber of the P^1-bundle (fiber type walls)
        target: Base of the contraction (fiber type walls)
    """

    wall: WallDescriptor
    kind: WallKind
    exceptional: Optional[LatticeClass] = None
    flipped_dims: Optional[Tuple[int, int]] = None
    locus: Optional[SpecialVariety] = None
    nef_side: Optional[WallSide] = None
    fiber: str = ""
    target: str = ""
    loci: List[Dict] = field(default_factory=list, compare=False)

    def to_dict(self) -> Dict:
        return {
            "I": list(sorted_subset(self.wall.I)),
            "k": rational_pair(self.wall.k),
            "wall": self.wall.label(),
            "kind": self.kind.value,
            "loci": self.loci,
        }


@lru_cache(maxsize=None)
def _nef_centroid(n: int) -> Vector:
    return named_cones(n)[DELTA_NEF].centroid()


def _exceptional_name(I, N: int) -> str:
    if len(I) == N - 1:
        return f"E_{next(iter(set(range(1, N + 1)) - I))}"
    return "E_{" + ",".join(str(i) for i in sorted_subset(I)) + "}"


def classify_wall(w: WallDescriptor, n: int) -> WallReport:
    """
    Classify a wall of the chamber decomposition.

    Coordinate walls alpha_i = -1/2 and alpha_i = 1/2 bound the movable
    cone and give P^1-bundles. H_I = 2 walls are divisorial contractions of
    E_{I^c}. H_I = k >= 3 walls are flips of a P^(k-2) into a P^(n+1-k);
    the locus flipped on the side of Delta_Nef is J_{I,s} with
    s = (k - |I| - 1)/2 when Delta_Nef lies below, and J_{I^c,s'} with
    s' = (|I| - k - 1)/2 when it lies above.

    Args:
        w: Wall descriptor (validated against the arrangement on construction)
        n: Even dimension

    Raises:
        ComputationError: If the wall meets the interior of Delta_Nef
    """
    if w.n != n:
        raise ComputationError(f"Wall {w.label()} belongs to n={w.n}, not n={n}")
    N = n + 3
    # boundary of the movable cone: a P^1-bundle
    if w.coordinate:
        i = w.index
        if w.k < 0:
            fiber = f"strict transform of a general line through p_{i}"
        else:
            fiber = f"strict transform of a general rational normal curve through p_j, j != {i}"
        target = f"Fano model of the blow-up of P^{n - 1} at {N - 1} points"
        return WallReport(
            wall=w, kind=WallKind.FIBER_TYPE, fiber=fiber, target=target,
            loci=[{"fiber": fiber, "target": target}],
        )

    k = int(w.k)
    # H_I = 2 contracts a divisor
    if k == 2:
        complement = frozenset(range(1, N + 1)) - w.I
        exceptional = class_E_I(complement, n)
        name = _exceptional_name(complement, N)
        return WallReport(
            wall=w, kind=WallKind.DIVISORIAL, exceptional=exceptional,
            loci=[{"exceptional": name, "class": exceptional.to_dict()}],
        )

    # orient the flip by which side of the wall Delta_Nef lies on
    level = w.value(_nef_centroid(n))
    if level == 0:
        raise ComputationError(f"{w.label()} cuts the interior of Delta_Nef")
    if level < 0:
        side = WallSide.BELOW
        # J_{I,s} with s = (k - |I| - 1)/2
        locus = SpecialVariety(n, w.I, (k - len(w.I) - 1) // 2)
        if 2 * locus.s != k - len(w.I) - 1:
            raise ComputationError(f"{w.label()}: |I| > k-1 on the Nef side")
    else:
        side = WallSide.ABOVE
        # J_{I^c,s} with s = (|I| - k - 1)/2
        if len(w.I) - k - 1 < 0:
            raise ComputationError(f"{w.label()}: |I| < k+1 on the Nef side")
        locus = SpecialVariety(n, frozenset(range(1, N + 1)) - w.I, (len(w.I) - k - 1) // 2)
    # P^(k-2) is exchanged for P^(n+1-k)
    dims = (k - 2, n + 1 - k)
    logger.debug("%s: flip of %s on the %s side", w.label(), locus.name(), side.value)
    return WallReport(
        wall=w, kind=WallKind.FLIP, flipped_dims=dims, locus=locus, nef_side=side,
        loci=[{
            "side": side.value,
            "variety": locus.name(),
            "I": list(sorted_subset(locus.I)),
            "s": locus.s,
            "dim": locus.dim,
            "description": locus.description(),
            "flipped_into_dim": dims[1] if side == WallSide.BELOW else dims[0],
        }],
    )


def classify_all(n: int, include_coordinate: bool = True) -> List[WallReport]:
    """Classify every arrangement hyperplane (and the coordinate walls)."""
    walls = list(arrangement(n))
    if include_coordinate:
        walls += list(coordinate_walls(n))
    return [classify_wall(w, n) for w in walls]


def nearest_walls(
    point: Vector, n: int, count: int = 3, exclude: Iterable[WallDescriptor] = ()
) -> List[Tuple[WallDescriptor, Fraction]]:
    """The count walls closest to a slice point, with squared distances, skipping exclude."""
    skip = set(exclude)
    walls = [w for w in list(arrangement(n)) + list(coordinate_walls(n)) if w not in skip]
    ranked = sorted(((w, w.distance_squared(point)) for w in walls), key=lambda pair: (pair[1], pair[0].label()))
    return ranked[:count]
