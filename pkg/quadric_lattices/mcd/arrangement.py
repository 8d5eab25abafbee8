"""
The Mori chamber arrangement (H_I = k) inside Delta, chamber lookup and
wall-crossing enumeration of the full-dimensional chambers.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from quadric_lattices.cones.polytope import (
    AffinePolytope,
    H_inequality,
    SliceInequality,
    coordinate_inequality,
    demihypercube,
    demihypercube_inequalities,
    eval_H,
)
from quadric_lattices.core.constants import CHAMBER_ENUMERATION_N_CAP, WallSide
from quadric_lattices.core.validators import validate_even_dimension, validate_length, validate_subset
from quadric_lattices.lattice.lattice_class import LatticeClass
from quadric_lattices.mcd.divisors import radial_project, slice_denominator
from quadric_lattices.mcd.named_cones import DELTA_MOV, named_cones
from quadric_lattices.utils.calculations import Vector, rational_pair, sorted_subset, subsets, to_vector
from quadric_lattices.utils.exceptions import CapExceededError, NotEffectiveError, ValidationError

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


@dataclass(frozen=True)
class WallDescriptor:
    """
    A hyperplane of the chamber arrangement: H_I = k, or alpha_i = k for a
    coordinate wall (I = {i}, k = +-1/2) of the movable cone.

    Attributes:
        n: Even dimension
        I: Index set
        k: Level
        side: Optional half-space, H_I <= k (below) or H_I >= k (above)
        coordinate: Whether this is the coordinate wall alpha_i = k
    """

    n: int
    I: FrozenSet[int]
    k: Fraction
    side: Optional[WallSide] = None
    coordinate: bool = False

    def __post_init__(self):
        validate_even_dimension(self.n)
        object.__setattr__(self, "I", validate_subset(self.I, self.N, "I"))
        object.__setattr__(self, "k", Fraction(self.k))
        self.check()

    @classmethod
    def coordinate_wall(cls, i: int, n: int, upper: bool) -> "WallDescriptor":
        """alpha_i = 1/2 (upper) or alpha_i = -1/2."""
        return cls(n, frozenset({i}), HALF if upper else -HALF, coordinate=True)

    @property
    def N(self) -> int:
        return self.n + 3

    def check(self) -> None:
        """
        Raises:
            ValidationError: If the hyperplane is not part of the arrangement
        """
        if self.coordinate:
            if len(self.I) != 1 or abs(self.k) != HALF:
                raise ValidationError(f"Coordinate walls are alpha_i = +-1/2, got I={sorted(self.I)}, k={self.k}")
            return
        m = self.n // 2
        if self.k.denominator != 1 or not 2 <= self.k <= m + 1:
            raise ValidationError(f"k must be an integer in 2..{m + 1}, got {self.k}")
        if len(self.I) % 2 == int(self.k) % 2:
            raise ValidationError(f"|I| and k must have different parity, got |I|={len(self.I)}, k={self.k}")

    @property
    def index(self) -> int:
        """The coordinate i of a coordinate wall."""
        return next(iter(self.I))

    def value(self, point: Sequence) -> Fraction:
        """H_I(point) - k, or alpha_i - k."""
        validate_length(point, self.N, "point")
        if self.coordinate:
            return to_vector(point)[self.index - 1] - self.k
        return eval_H(self.I, point) - self.k

    def sign(self, point: Sequence) -> int:
        return _sign(self.value(point))

    def distance_squared(self, point: Sequence) -> Fraction:
        """Squared Euclidean distance from point to the hyperplane."""
        norm = 1 if self.coordinate else self.N
        return self.value(point) ** 2 / norm

    def inequality(self, side: Optional[WallSide] = None) -> SliceInequality:
        """The closed half-space on the given side (self.side by default)."""
        side = side or self.side
        if side is None:
            raise ValidationError(f"{self.label()} has no side")
        above = side == WallSide.ABOVE
        if self.coordinate:
            # alpha_i >= -1/2 is the "above" side of alpha_i = -1/2
            upper = self.k > 0
            q = coordinate_inequality(self.index, self.N, upper=upper)
            if above != upper:
                return q
            relation = ">=" if above else "<="
            return SliceInequality(-q.constant, tuple(-c for c in q.coeffs), f"alpha_{self.index} {relation} {self.k}")
        return H_inequality(self.I, self.k, self.N, above=above)

    def with_side(self, side: WallSide) -> "WallDescriptor":
        return WallDescriptor(self.n, self.I, self.k, side, self.coordinate)

    def label(self) -> str:
        if self.coordinate:
            return f"alpha_{self.index} = {self.k}"
        return "H_{" + ",".join(str(i) for i in sorted_subset(self.I)) + f"}} = {self.k}"

    def to_dict(self) -> Dict:
        data = {"I": list(sorted_subset(self.I)), "k": rational_pair(self.k), "label": self.label()}
        if self.side is not None:
            data["side"] = self.side.value
        return data


@lru_cache(maxsize=None)
def arrangement(n: int) -> Tuple[WallDescriptor, ...]:
    """
    All hyperplanes H_I = k with 2 <= k <= m+1 and |I| not congruent to k mod 2.

    Ordered by k, then |I|, then I.
    """
    validate_even_dimension(n)
    m = n // 2
    walls = []
    for k in range(2, m + 2):
        for I in subsets(n + 3):
            if len(I) % 2 != k % 2:
                walls.append(WallDescriptor(n, I, k))
    logger.debug("Arrangement for n=%d has %d hyperplanes", n, len(walls))
    return tuple(walls)


def coordinate_walls(n: int) -> Tuple[WallDescriptor, ...]:
    """The 2(n+3) walls alpha_i = -1/2, alpha_i = 1/2."""
    validate_even_dimension(n)
    return tuple(
        WallDescriptor.coordinate_wall(i, n, upper)
        for i in range(1, n + 4)
        for upper in (False, True)
    )


@dataclass(frozen=True)
class ChamberDescriptor:
    """
    Sign vector over the full arrangement, with a witness point.

    Attributes:
        n: Even dimension
        signs: One of -1, 0, +1 per wall of arrangement(n), in order
        sample_point: Slice point realising the signs
    """

    n: int
    signs: Tuple[int, ...]
    sample_point: Vector = field(compare=False)

    @property
    def is_full_dimensional(self) -> bool:
        return all(s != 0 for s in self.signs)

    def walls_through(self) -> List[WallDescriptor]:
        """Walls containing the sample point."""
        return [w for w, s in zip(arrangement(self.n), self.signs) if s == 0]

    def separating_walls(self, other: "ChamberDescriptor") -> List[WallDescriptor]:
        """Walls on which the two sign vectors disagree."""
        if other.n != self.n:
            raise ValidationError(f"Chambers for different n: {self.n} vs {other.n}")
        return [w for w, a, b in zip(arrangement(self.n), self.signs, other.signs) if a != b]

    def oriented_walls(self) -> List[WallDescriptor]:
        return [
            w.with_side(WallSide.ABOVE if s > 0 else WallSide.BELOW)
            for w, s in zip(arrangement(self.n), self.signs)
            if s != 0
        ]

    def polytope(self) -> AffinePolytope:
        """Closure of the sign region inside Delta."""
        inequalities = demihypercube_inequalities(self.n + 3)
        inequalities += [w.inequality() for w in self.oriented_walls()]
        for w in self.walls_through():
            inequalities.append(w.inequality(WallSide.ABOVE))
            inequalities.append(w.inequality(WallSide.BELOW))
        return AffinePolytope.from_inequalities(inequalities, slice="chamber")

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "signs": "".join({1: "+", 0: "0", -1: "-"}[s] for s in self.signs),
            "sample_point": [rational_pair(x) for x in self.sample_point],
        }


def chamber_of_point(alpha: Sequence, n: int) -> ChamberDescriptor:
    """
    Chamber signs at a slice point.

    Raises:
        NotEffectiveError: If the point lies outside Delta
    """
    validate_even_dimension(n)
    point = to_vector(alpha)
    validate_length(point, n + 3, "alpha")
    if not demihypercube(n + 3).contains(point):
        raise NotEffectiveError(f"Point {[str(a) for a in point]} lies outside Delta")
    return ChamberDescriptor(n, tuple(w.sign(point) for w in arrangement(n)), point)


def chamber_of(x: LatticeClass) -> ChamberDescriptor:
    """
    Chamber of an XSide class, via its radial projection.

    Raises:
        NotEffectiveError: If x is not in Eff(X)
    """
    if slice_denominator(x) <= 0:
        raise NotEffectiveError(f"{x} is not effective: (n+1)y + sum x_i <= 0")
    try:
        return chamber_of_point(radial_project(x), x.space.n)
    except NotEffectiveError:
        raise NotEffectiveError(f"{x} is not effective: its projection lies outside Delta") from None


@dataclass(frozen=True)
class EnumeratedChamber:
    """A full-dimensional chamber found by wall crossing."""

    descriptor: ChamberDescriptor
    vertex_count: int
    in_movable: bool
    walls: Tuple[WallDescriptor, ...]

    def to_dict(self) -> Dict:
        data = self.descriptor.to_dict()
        data.update({
            "vertices": self.vertex_count,
            "movable": self.in_movable,
            "walls": [w.label() for w in self.walls],
        })
        return data


def enumerate_chambers(n: int, cap: int = CHAMBER_ENUMERATION_N_CAP) -> List[EnumeratedChamber]:
    """
    Full-dimensional chambers of the arrangement inside Delta.

    Breadth-first search from the chamber of the origin: every facet of a
    chamber lying on an arrangement wall is crossed by flipping that one
    sign. Sample points are vertex centroids.

    Raises:
        CapExceededError: If n exceeds cap
    """
    validate_even_dimension(n)
    if n > cap:
        raise CapExceededError(f"Chamber enumeration requested for n={n}, cap is n <= {cap}")
    walls = arrangement(n)
    wall_faces = {}
    for index, w in enumerate(walls):
        for side in WallSide:
            wall_faces[w.inequality(side).homogenized()] = index
    movable = named_cones(n)[DELTA_MOV]
    origin = tuple(Fraction(0) for _ in range(n + 3))
    start = tuple(w.sign(origin) for w in walls)
    queue = deque([start])
    seen = {start}
    found = []
    while queue:
        signs = queue.popleft()
        polytope = ChamberDescriptor(n, signs, origin).polytope()
        sample = polytope.centroid()
        crossing = sorted({wall_faces[f] for f in polytope.facet_set if f in wall_faces})
        found.append(EnumeratedChamber(
            descriptor=ChamberDescriptor(n, signs, sample),
            vertex_count=len(polytope.vertices),
            in_movable=polytope.is_subset_of(movable),
            walls=tuple(walls[i] for i in crossing),
        ))
        for index in crossing:
            neighbour = signs[:index] + (-signs[index],) + signs[index + 1:]
            if neighbour not in seen:
                seen.add(neighbour)
                queue.append(neighbour)
    logger.info("Enumerated %d chambers for n=%d", len(found), n)
    return sorted(found, key=lambda c: c.descriptor.signs, reverse=True)
