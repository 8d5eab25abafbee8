"""
Exact rational polyhedral cones held in both descriptions at once.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from quadric_lattices.cones.double_description import extreme_rays
from quadric_lattices.lattice.lattice_class import LatticeClass
from quadric_lattices.lattice.space import LatticeSpace
from quadric_lattices.utils.calculations import (
    IntVector,
    Matrix,
    dot,
    inverse,
    mat_vec,
    primitive,
    primitive_line,
    rank,
    to_vector,
)
from quadric_lattices.utils.exceptions import ComputationError, ValidationError

logger = logging.getLogger(__name__)

VectorLike = Union[Sequence, LatticeClass]


@dataclass(frozen=True, eq=False)
class RationalCone:
    """
    A polyhedral cone C = lineality + cone(rays) = {x : f . x >= 0, e . x = 0}.

    Coordinates (and the standard pairing of facets with rays) refer to the
    chosen basis of the ambient lattice, or to Q^dim when no lattice is given.

    Attributes:
        dim: Ambient dimension
        rays: Primitive extreme rays of the pointed part
        facets: Primitive irredundant facet normals (lying in the span of C)
        lineality: Basis of the largest linear subspace C intersect -C
        equations: Basis of the forms vanishing on C
        ambient: Lattice the coordinates live in, if any
        basis: Basis name in the ambient lattice
    """

    dim: int
    rays: Tuple[IntVector, ...]
    facets: Tuple[IntVector, ...]
    lineality: Tuple[IntVector, ...] = ()
    equations: Tuple[IntVector, ...] = ()
    ambient: Optional[LatticeSpace] = None
    basis: Optional[str] = None

    @property
    def cone_dim(self) -> int:
        return self.dim - len(self.equations)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @property
    def is_full_dimensional(self) -> bool:
        return not self.equations

    def coordinates(self, x: VectorLike) -> Tuple:
        """Coordinates of x in this cone's basis."""
        if isinstance(x, LatticeClass):
            if self.ambient is None:
                raise ValidationError("Cone has no ambient lattice; pass coordinates")
            self.ambient.check_same(x.space)
            return x.convert(self.basis).coords
        if len(x) != self.dim:
            raise ValidationError(f"Vector must have length {self.dim}, got {len(x)}")
        return to_vector(x)

    def contains(self, x: VectorLike) -> bool:
        coords = self.coordinates(x)
        return all(dot(f, coords) >= 0 for f in self.facets) and all(
            dot(e, coords) == 0 for e in self.equations
        )

    def has_ray(self, x: VectorLike) -> bool:
        """Whether x spans one of the extreme rays."""
        return primitive(self.coordinates(x)) in set(self.rays)

    def ray_zero_set(self, functional: Sequence) -> List[IntVector]:
        return [r for r in self.rays if dot(functional, r) == 0]

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, RationalCone):
            return NotImplemented
        if self.dim != other.dim or self.ambient != other.ambient or self.basis != other.basis:
            return False
        return (
            set(self.rays) == set(other.rays)
            and _same_span(self.lineality, other.lineality)
            and _same_span(self.equations, other.equations)
        )

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self.rays)))

    def to_dict(self) -> Dict[str, Any]:
        ambient = None
        if self.ambient is not None:
            ambient = {"n": self.ambient.n, "side": self.ambient.side.value}
        return {
            "ambient": ambient,
            "basis": self.basis,
            "dim": self.dim,
            "rays": [list(r) for r in sorted(self.rays)],
            "facets": [list(f) for f in sorted(self.facets)],
            "lineality": [list(v) for v in self.lineality],
        }

    def __repr__(self) -> str:
        return (
            f"RationalCone(dim={self.dim}, rays={len(self.rays)}, facets={len(self.facets)}, "
            f"lineality={len(self.lineality)})"
        )


def _same_span(a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    return rank(list(a)) == rank(list(a) + list(b))


def _with_negatives(vectors: Iterable[Sequence[int]]) -> List[List[int]]:
    out = []
    for v in vectors:
        out.append(list(v))
        out.append([-x for x in v])
    return out


def _build(generators: List[List[int]], dim: int, ambient, basis) -> RationalCone:
    """Cone generated by the given vectors, both descriptions irredundant."""
    facets, equations = extreme_rays(generators, dim)
    rays, lineality = extreme_rays([list(f) for f in facets] + _with_negatives(equations), dim)
    logger.debug("Built cone: %d rays, %d facets, dim %d", len(rays), len(facets), dim)
    return RationalCone(
        dim=dim,
        rays=tuple(rays),
        facets=tuple(facets),
        lineality=tuple(primitive_line(v) for v in lineality),
        equations=tuple(primitive_line(v) for v in equations),
        ambient=ambient,
        basis=basis,
    )


def _resolve_ambient(vectors, ambient, basis, dim):
    """Turn a mix of LatticeClass objects and raw vectors into coordinates."""
    classes = [v for v in vectors if isinstance(v, LatticeClass)]
    if classes and ambient is None:
        ambient = classes[0].space
    if ambient is not None:
        basis = basis or ambient.canonical_basis
        dim = ambient.rank
    coords = []
    for v in vectors:
        if isinstance(v, LatticeClass):
            ambient.check_same(v.space)
            coords.append(v.convert(basis).coords)
        else:
            coords.append(to_vector(v))
    if dim is None:
        if not coords:
            raise ValidationError("Cannot infer the dimension of an empty vector list")
        dim = len(coords[0])
    for c in coords:
        if len(c) != dim:
            raise ValidationError(f"Vector must have length {dim}, got {len(c)}")
    return coords, ambient, basis, dim


def cone_from_rays(
    rays: Sequence[VectorLike],
    ambient: Optional[LatticeSpace] = None,
    basis: Optional[str] = None,
) -> RationalCone:
    """
    Cone generated by the given vectors.

    Raises:
        ValidationError: If the list is empty or contains a zero vector
    """
    if not rays:
        raise ValidationError("cone_from_rays needs at least one generator")
    coords, ambient, basis, dim = _resolve_ambient(rays, ambient, basis, None)
    gens = []
    for c in coords:
        if all(x == 0 for x in c):
            raise ValidationError("Zero vector is not a valid ray generator")
        gens.append(list(primitive(c)))
    return _build(gens, dim, ambient, basis)


def cone_from_facets(
    normals: Sequence[Sequence],
    ambient: Optional[LatticeSpace] = None,
    basis: Optional[str] = None,
    dim: Optional[int] = None,
    equations: Sequence[Sequence] = (),
) -> RationalCone:
    """
    Cone {x : a . x >= 0 for a in normals, e . x = 0 for e in equations}.

    Raises:
        ValidationError: If the list is empty or contains a zero normal
    """
    if not normals and not equations:
        raise ValidationError("cone_from_facets needs at least one inequality")
    if ambient is not None:
        basis = basis or ambient.canonical_basis
        dim = ambient.rank
    rows = []
    for a in normals:
        vec = to_vector(a)
        if all(x == 0 for x in vec):
            raise ValidationError("Zero vector is not a valid facet normal")
        rows.append(list(primitive(vec)))
    eq_rows = [list(primitive(e)) for e in equations]
    if dim is None:
        dim = len((rows or eq_rows)[0])
    for row in rows + eq_rows:
        if len(row) != dim:
            raise ValidationError(f"Normal must have length {dim}, got {len(row)}")
    rays, lineality = extreme_rays(rows + _with_negatives(eq_rows), dim)
    if not rays and not lineality:
        return zero_cone(dim, ambient, basis)
    return _build([list(r) for r in rays] + _with_negatives(lineality), dim, ambient, basis)


def zero_cone(dim: int, ambient=None, basis=None) -> RationalCone:
    unit = tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))
    return RationalCone(dim=dim, rays=(), facets=(), equations=unit, ambient=ambient, basis=basis)


def _gram(cone: RationalCone) -> Optional[Matrix]:
    if cone.ambient is None:
        return None
    return cone.ambient.gram(cone.basis)


def dual(C: RationalCone) -> RationalCone:
    """
    The cone of vectors v with pair(v, x) >= 0 for all x in C.

    The pairing is the ambient bilinear form written in C's basis (the
    standard dot product when C has no ambient lattice).
    """
    G = _gram(C)
    G_inv = inverse(G) if G is not None else None

    def to_vectors(form):
        return tuple(form) if G is None else mat_vec(G_inv, form)

    def to_forms(vector):
        return tuple(vector) if G is None else mat_vec(G, vector)

    if not C.is_pointed or not C.is_full_dimensional:
        logger.info("Dual of a degenerate cone: lineality %d, equations %d",
                    len(C.lineality), len(C.equations))
    return RationalCone(
        dim=C.dim,
        rays=tuple(sorted(primitive(to_vectors(f)) for f in C.facets)),
        facets=tuple(sorted(primitive(to_forms(r)) for r in C.rays)),
        lineality=tuple(primitive_line(to_vectors(e)) for e in C.equations),
        equations=tuple(primitive_line(to_forms(v)) for v in C.lineality),
        ambient=C.ambient,
        basis=C.basis,
    )


def membership(C: RationalCone, x: VectorLike) -> bool:
    """True iff x satisfies every facet inequality and equation of C."""
    return C.contains(x)


def face_of(C: RationalCone, functional: VectorLike) -> RationalCone:
    """
    The face of C on which a nonnegative functional vanishes.

    A LatticeClass argument stands for the functional pair(functional, -).

    Raises:
        ComputationError: If the functional is negative somewhere on C
    """
    if isinstance(functional, LatticeClass):
        if C.ambient is None:
            raise ValidationError("Cone has no ambient lattice; pass a coordinate functional")
        form = C.ambient.functional(functional, C.basis)
    else:
        form = to_vector(functional)
        if len(form) != C.dim:
            raise ValidationError(f"Functional must have length {C.dim}, got {len(form)}")
    if any(dot(form, r) < 0 for r in C.rays) or any(dot(form, v) != 0 for v in C.lineality):
        raise ComputationError("Functional is not nonnegative on the cone; no face is cut out")
    zero_rays = C.ray_zero_set(form)
    generators = [list(r) for r in zero_rays] + _with_negatives(C.lineality)
    if not generators:
        return zero_cone(C.dim, C.ambient, C.basis)
    return _build(generators, C.dim, C.ambient, C.basis)
