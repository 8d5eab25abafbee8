"""
Polytopes in slice coordinates alpha_1..alpha_N, the functions H_I, and the
demihypercube.

A polytope is stored together with the cone over it in Q^(N+1): the point
alpha corresponds to the ray through (1, alpha), and the inequality
b + a . alpha >= 0 to the functional (b, a).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import pandas as pd

from quadric_lattices.cones.cone import RationalCone, cone_from_facets, cone_from_rays
from quadric_lattices.core.validators import validate_integer_positive, validate_length, validate_subset
from quadric_lattices.utils.calculations import (
    IntVector,
    Vector,
    dot,
    primitive,
    rational_pair,
    sorted_subset,
    subsets,
    to_vector,
)
from quadric_lattices.utils.exceptions import ComputationError, ValidationError

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class SliceInequality:
    """
    The inequality constant + coeffs . alpha >= 0.

    Attributes:
        constant: Affine term
        coeffs: Linear coefficients on alpha_1..alpha_N
        label: Human-readable name, e.g. "H_{1,2} >= 1"
    """

    constant: Fraction
    coeffs: Tuple[Fraction, ...]
    label: str = field(default="", compare=False)

    def evaluate(self, point: Sequence) -> Fraction:
        return self.constant + dot(self.coeffs, point)

    def homogenized(self) -> IntVector:
        """Primitive functional (b, a) on the cone over the slice."""
        return primitive((self.constant,) + tuple(self.coeffs))

    def to_dict(self) -> Dict:
        return {
            "label": self.label,
            "constant": rational_pair(self.constant),
            "coeffs": [rational_pair(c) for c in self.coeffs],
        }


def H_inequality(I: Iterable[int], k, N: int, above: bool = True) -> SliceInequality:
    """H_I >= k (above) or H_I <= k (below) as a slice inequality."""
    subset = validate_subset(I, N, "I")
    level = Fraction(k)
    coeffs = tuple(Fraction(-1) if j in subset else Fraction(1) for j in range(1, N + 1))
    constant = Fraction(N, 2) - level
    name = "H_{" + ",".join(str(i) for i in sorted_subset(subset)) + "}"
    if above:
        return SliceInequality(constant, coeffs, f"{name} >= {level}")
    return SliceInequality(-constant, tuple(-c for c in coeffs), f"{name} <= {level}")


def coordinate_inequality(i: int, N: int, upper: bool) -> SliceInequality:
    """alpha_i <= 1/2 (upper) or alpha_i >= -1/2."""
    sign = Fraction(-1) if upper else Fraction(1)
    coeffs = tuple(sign if j == i else Fraction(0) for j in range(1, N + 1))
    label = f"alpha_{i} <= 1/2" if upper else f"alpha_{i} >= -1/2"
    return SliceInequality(HALF, coeffs, label)


def eval_H(I: Iterable[int], point: Sequence) -> Fraction:
    """
    H_I(alpha) = sum_{j not in I} (1/2 + alpha_j) + sum_{i in I} (1/2 - alpha_i).
    """
    N = len(point)
    subset = validate_subset(I, N, "I")
    alpha = to_vector(point)
    return sum(
        (HALF - a if j in subset else HALF + a for j, a in enumerate(alpha, start=1)),
        Fraction(0),
    )


def vertex(I: Iterable[int], N: int) -> Vector:
    """v_I: alpha_i = 1/2 for i in I and -1/2 otherwise."""
    subset = validate_subset(I, N, "I")
    return tuple(HALF if j in subset else -HALF for j in range(1, N + 1))


@dataclass(frozen=True, eq=False)
class AffinePolytope:
    """
    A bounded polytope in slice coordinates with vertices and facets.

    Attributes:
        N: Number of slice coordinates
        slice: Description of the affine hyperplane the coordinates live on
        vertices: Sorted vertex list
        inequalities: Irredundant facet inequalities
        cone: Cone over the polytope in Q^(N+1)
    """

    N: int
    slice: str
    vertices: Tuple[Vector, ...]
    inequalities: Tuple[SliceInequality, ...]
    cone: RationalCone

    @classmethod
    def from_cone(cls, cone: RationalCone, slice: str, labels: Dict[IntVector, str] = None) -> "AffinePolytope":
        labels = labels or {}
        vertices = []
        for r in cone.rays:
            if r[0] <= 0:
                raise ComputationError(f"Polytope is unbounded (recession ray {r})")
            vertices.append(tuple(Fraction(x, r[0]) for x in r[1:]))
        if cone.lineality:
            raise ComputationError("Polytope contains a line")
        inequalities = tuple(
            SliceInequality(Fraction(f[0]), tuple(Fraction(x) for x in f[1:]), labels.get(f, ""))
            for f in cone.facets
        )
        return cls(cone.dim - 1, slice, tuple(sorted(vertices)), inequalities, cone)

    @classmethod
    def from_vertices(cls, points: Sequence[Sequence], slice: str = "alpha") -> "AffinePolytope":
        """Convex hull of the given slice points (double description)."""
        rays = [(Fraction(1),) + to_vector(p) for p in points]
        return cls.from_cone(cone_from_rays(rays), slice)

    @classmethod
    def from_inequalities(cls, inequalities: Sequence[SliceInequality], slice: str = "alpha") -> "AffinePolytope":
        """
        Polytope cut out by the inequalities.

        Raises:
            ComputationError: If the result is empty or unbounded
        """
        if not inequalities:
            raise ValidationError("At least one inequality is required")
        N = len(inequalities[0].coeffs)
        normals = [ineq.homogenized() for ineq in inequalities]
        # t >= 0 selects the slice side of the homogenised cone
        normals.append(tuple(int(j == 0) for j in range(N + 1)))
        labels = {ineq.homogenized(): ineq.label for ineq in inequalities}
        cone = cone_from_facets(normals, dim=N + 1)
        if not cone.rays:
            raise ComputationError("Inequalities define an empty polytope")
        return cls.from_cone(cone, slice, labels)

    @property
    def facet_set(self) -> FrozenSet[IntVector]:
        return frozenset(ineq.homogenized() for ineq in self.inequalities)

    def matches(self, inequalities: Iterable[SliceInequality]) -> bool:
        """Whether the given list is exactly the facet list (up to positive scaling)."""
        given = [ineq.homogenized() for ineq in inequalities]
        return len(given) == len(set(given)) and frozenset(given) == self.facet_set

    def contains(self, point: Sequence) -> bool:
        validate_length(point, self.N, "point")
        return all(ineq.evaluate(point) >= 0 for ineq in self.inequalities)

    def is_interior(self, point: Sequence) -> bool:
        validate_length(point, self.N, "point")
        return all(ineq.evaluate(point) > 0 for ineq in self.inequalities)

    def vertices_on(self, inequality: SliceInequality) -> List[Vector]:
        return [v for v in self.vertices if inequality.evaluate(v) == 0]

    def centroid(self) -> Vector:
        """Average of the vertices (an interior point of a full-dimensional polytope)."""
        count = len(self.vertices)
        return tuple(sum((v[i] for v in self.vertices), Fraction(0)) / count for i in range(self.N))

    def is_subset_of(self, other: "AffinePolytope") -> bool:
        return all(other.contains(v) for v in self.vertices)

    def to_dataframe(self) -> pd.DataFrame:
        """One row per facet with its label and vertex count."""
        rows = []
        for ineq in sorted(self.inequalities, key=lambda q: q.homogenized()):
            rows.append({
                "label": ineq.label,
                "normal": list(ineq.homogenized()),
                "vertices_on_facet": len(self.vertices_on(ineq)),
            })
        return pd.DataFrame(rows)

    def to_dict(self) -> Dict:
        return {
            "slice": self.slice,
            "N": self.N,
            "vertices": [[rational_pair(x) for x in v] for v in self.vertices],
            "facets": [list(f) for f in sorted(self.facet_set)],
        }

    def __repr__(self) -> str:
        return (f"AffinePolytope(N={self.N}, vertices={len(self.vertices)}, "
                f"facets={len(self.inequalities)})")


def demihypercube_inequalities(N: int) -> List[SliceInequality]:
    """-1/2 <= alpha_i <= 1/2 and H_I >= 1 for |I| even."""
    validate_integer_positive(N, "N")
    inequalities = []
    for i in range(1, N + 1):
        inequalities.append(coordinate_inequality(i, N, upper=False))
        inequalities.append(coordinate_inequality(i, N, upper=True))
    for I in subsets(N):
        if len(I) % 2 == 0:
            inequalities.append(H_inequality(I, 1, N))
    return inequalities


@lru_cache(maxsize=None)
def demihypercube(N: int) -> AffinePolytope:
    """
    Convex hull of the odd vertices v_I of the cube [-1/2, 1/2]^N.

    Facets are computed from the vertices by double description and carry
    the labels of the matching inequalities.

    Raises:
        ValidationError: If N < 4
    """
    validate_integer_positive(N, "N")
    if N < 4:
        raise ValidationError(f"N must be at least 4, got {N}")
    logger.info("Computing the %d-dimensional demihypercube", N)
    points = [vertex(I, N) for I in subsets(N) if len(I) % 2 == 1]
    hull = AffinePolytope.from_vertices(points, slice=f"alpha in Q^{N}")
    labels = {ineq.homogenized(): ineq.label for ineq in demihypercube_inequalities(N)}
    labelled = tuple(
        SliceInequality(q.constant, q.coeffs, labels.get(q.homogenized(), "")) for q in hull.inequalities
    )
    return AffinePolytope(hull.N, hull.slice, hull.vertices, labelled, hull.cone)
