"""
The cone E spanned by the plane classes, its dual, and its linear symmetries.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet, List, Sequence, Tuple

import numpy as np

from quadric_lattices.cones.cone import RationalCone, cone_from_rays, dual
from quadric_lattices.core.constants import SYMMETRY_N_CAP, Side, Z_EPS_BASIS
from quadric_lattices.core.validators import validate_even_dimension
from quadric_lattices.lattice.lattice_class import LatticeClass
from quadric_lattices.lattice.space import make_space
from quadric_lattices.planes.labels import PlaneLabel, all_labels, canonical, plane_class
from quadric_lattices.utils.calculations import (
    IntVector,
    Matrix,
    dot,
    independent_rows,
    inverse,
    mat_mul,
    mat_vec,
    primitive,
    subsets,
    transpose,
)
from quadric_lattices.utils.exceptions import CapExceededError, ComputationError, ValidationError
from quadric_lattices.weyl.element import WeylElement
from quadric_lattices.weyl.group import GroupHandle

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


@lru_cache(maxsize=None)
def cone_E(n: int) -> RationalCone:
    """E = Cone(M_I) in the (eta, eps) basis."""
    validate_even_dimension(n)
    space = make_space(n, Side.ZSIDE)
    logger.info("Computing the cone E for n=%d", n)
    return cone_from_rays([plane_class(L) for L in all_labels(n)], space, Z_EPS_BASIS)


@lru_cache(maxsize=None)
def cone_E_dual(n: int) -> RationalCone:
    """E^dual with respect to the intersection form."""
    return dual(cone_E(n))


def delta(L: PlaneLabel) -> LatticeClass:
    """delta_M = floor((m+1)/2) eta + (-1)^m M."""
    space = make_space(L.n, Side.ZSIDE)
    m = L.m
    return space.eta() * ((m + 1) // 2) + plane_class(L) * ((-1) ** m)


def eta_M(L: PlaneLabel) -> LatticeClass:
    """eta_M = floor(m/2) eta + (-1)^(m-1) M."""
    space = make_space(L.n, Side.ZSIDE)
    m = L.m
    return space.eta() * (m // 2) + plane_class(L) * ((-1) ** (m - 1))


def E_inequalities(n: int) -> List[Tuple[str, IntVector]]:
    """
    Facet normals of E on (y, x_1..x_N) = coordinates in the (eta, eps) basis:
    2y + x_i >= 0, 2y - x_i >= 0, 2(n+1)y + sum_{j not in I} x_j - sum_{i in I} x_i >= 0 (|I| even).
    """
    validate_even_dimension(n)
    N = n + 3
    rows = []
    for i in range(1, N + 1):
        rows.append((f"2y + x_{i}", tuple([2] + [int(j == i) for j in range(1, N + 1)])))
        rows.append((f"2y - x_{i}", tuple([2] + [-int(j == i) for j in range(1, N + 1)])))
    for I in subsets(N):
        if len(I) % 2 == 0:
            label = canonical(I, n).name()
            rows.append((f"I={label}", tuple([2 * (n + 1)] + [-1 if j in I else 1 for j in range(1, N + 1)])))
    return rows


def E_dual_generators(n: int) -> List[Tuple[str, LatticeClass]]:
    """Named generators of E^dual: 1/2 eta +- eps_i and 2 delta_M."""
    validate_even_dimension(n)
    space = make_space(n, Side.ZSIDE)
    generators = []
    for i in range(1, n + 4):
        generators.append((f"1/2 eta + eps_{i}", space.eta() * HALF + space.eps(i)))
        generators.append((f"1/2 eta - eps_{i}", space.eta() * HALF - space.eps(i)))
    for L in all_labels(n):
        generators.append((f"2 delta_M, M={L.name()}", delta(L) * 2))
    return generators


def E_rays(n: int) -> List[Tuple[str, LatticeClass]]:
    return [(f"M={L.name()}", plane_class(L)) for L in all_labels(n)]


# ----------------------------------------------------------------------
# symmetries


def symmetry_matrices(cone: RationalCone, invariant: Sequence[Fraction]) -> FrozenSet[Matrix]:
    """
    Linear maps f with f(C) = C and invariant . f(x) = invariant . x.

    The images of a basis of rays are chosen by backtracking over ray
    permutations that preserve the facet-incidence counts; each complete
    choice determines one linear map, which is then verified.
    """
    rays = list(cone.rays)
    count = len(rays)
    incidence = np.array([[int(dot(f, r) == 0) for f in cone.facets] for r in rays], dtype=np.int64)
    profile = incidence @ incidence.T
    basis = independent_rows([list(r) for r in rays])
    if len(basis) != cone.dim:
        raise ComputationError("Rays do not span the ambient space")
    base_matrix = transpose([tuple(Fraction(x) for x in rays[b]) for b in basis])
    base_inverse = inverse(base_matrix)
    levels = [dot(invariant, r) for r in rays]
    ray_set = set(rays)
    found = set()

    def extend(images: List[int]) -> None:
        depth = len(images)
        if depth == len(basis):
            candidate = _assemble(images)
            if candidate is not None:
                found.add(candidate)
            return
        source = basis[depth]
        for t in range(count):
            if t in images or levels[t] == 0:
                continue
            if profile[source, source] != profile[t, t]:
                continue
            if any(profile[basis[a], source] != profile[images[a], t] for a in range(depth)):
                continue
            extend(images + [t])

    def _assemble(images: List[int]):
        columns = []
        for b, t in zip(basis, images):
            scale = Fraction(levels[b]) / levels[t]
            columns.append(tuple(scale * x for x in rays[t]))
        f = mat_mul(transpose(columns), base_inverse)
        images_of_rays = set()
        for r in rays:
            image = mat_vec(f, r)
            if all(x == 0 for x in image) or primitive(image) not in ray_set:
                return None
            images_of_rays.add(primitive(image))
        if len(images_of_rays) != count:
            return None
        for j in range(cone.dim):
            unit = [int(i == j) for i in range(cone.dim)]
            if dot(invariant, mat_vec(f, unit)) != dot(invariant, unit):
                return None
        return f

    extend([])
    logger.info("Symmetry search found %d linear maps", len(found))
    return frozenset(found)


def as_weyl_element(matrix: Matrix) -> WeylElement:
    """
    Read a signed permutation off a matrix on the (eta, eps) basis.

    Raises:
        ComputationError: If the matrix is not eta-fixing signed permutation
    """
    size = len(matrix)
    N = size - 1
    if matrix[0][0] != 1 or any(matrix[0][j] != 0 for j in range(1, size)) or any(
        matrix[i][0] != 0 for i in range(1, size)
    ):
        raise ComputationError("Symmetry does not fix eta")
    perm, signs = [], []
    for j in range(1, size):
        column = [matrix[i][j] for i in range(1, size)]
        nonzero = [(i, v) for i, v in enumerate(column, start=1) if v != 0]
        if len(nonzero) != 1 or abs(nonzero[0][1]) != 1:
            raise ComputationError("Symmetry is not a signed permutation of the eps basis")
        perm.append(nonzero[0][0])
        signs.append(int(nonzero[0][1]))
    try:
        return WeylElement(N, tuple(perm), tuple(signs))
    except ValidationError as e:
        raise ComputationError(f"Symmetry outside W(D_{N}): {e}")


def linear_symmetries(E: RationalCone, eta: LatticeClass, cap: int = SYMMETRY_N_CAP) -> GroupHandle:
    """
    The group of linear maps preserving E and pairing with eta.

    Args:
        E: The cone of plane classes in the (eta, eps) basis
        eta: The class whose pairing is preserved
        cap: Largest n for which the search is attempted

    Returns:
        GroupHandle carrying the full element set

    Raises:
        CapExceededError: If n exceeds cap
    """
    space = E.ambient
    if space is None or space.side != Side.ZSIDE or E.basis != Z_EPS_BASIS:
        raise ValidationError("linear_symmetries expects a ZSide cone in the (eta, eps) basis")
    if space.n > cap:
        raise CapExceededError(f"Symmetry search requested for n={space.n}, cap is n <= {cap}")
    invariant = space.functional(eta, Z_EPS_BASIS)
    matrices = symmetry_matrices(E, invariant)
    elements = [as_weyl_element(f) for f in matrices]
    return GroupHandle(space.N, elements, name="Aut(E, eta)", elements=elements)
