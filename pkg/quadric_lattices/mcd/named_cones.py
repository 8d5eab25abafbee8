"""
The nested polytopes Delta > Delta_Mov > {Delta_Nef, Delta_Fano} in slice
coordinates and the cones over them in H^2(X).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from quadric_lattices.cones.cone import RationalCone, cone_from_facets
from quadric_lattices.cones.polytope import (
    AffinePolytope,
    H_inequality,
    SliceInequality,
    coordinate_inequality,
    demihypercube,
    demihypercube_inequalities,
)
from quadric_lattices.core.constants import Side, X_ANTICANONICAL_BASIS
from quadric_lattices.core.validators import validate_even_dimension
from quadric_lattices.lattice.space import make_space
from quadric_lattices.mcd.divisors import slice_inequality_to_cone
from quadric_lattices.utils.calculations import IntVector, Vector, sorted_subset, subsets

logger = logging.getLogger(__name__)

DELTA = "Delta"
DELTA_MOV = "Delta_Mov"
DELTA_NEF = "Delta_Nef"
DELTA_FANO = "Delta_Fano"


def mov_inequalities(n: int) -> List[SliceInequality]:
    """-1/2 <= alpha_i <= 1/2 and H_I >= 2 for |I| odd."""
    N = n + 3
    inequalities = []
    for i in range(1, N + 1):
        inequalities.append(coordinate_inequality(i, N, upper=False))
        inequalities.append(coordinate_inequality(i, N, upper=True))
    inequalities.extend(H_inequality(I, 2, N) for I in subsets(N) if len(I) % 2 == 1)
    return inequalities


def nef_inequalities(n: int) -> List[SliceInequality]:
    """
    H_{i} >= 2, H_{i,j} <= 3 and H_{} <= 3: nonnegativity on the lines in
    E_i, the lines through two points and the rational normal curve
    through all of them.

    The last one is redundant unless n = 2.
    """
    N = n + 3
    inequalities = [H_inequality({i}, 2, N) for i in range(1, N + 1)]
    inequalities.extend(H_inequality(I, 3, N, above=False) for I in subsets(N) if len(I) == 2)
    inequalities.append(H_inequality((), 3, N, above=False))
    return inequalities


def fano_inequalities(n: int) -> List[SliceInequality]:
    """H_I >= m+1 for |I| congruent to m mod 2."""
    N = n + 3
    m = n // 2
    return [H_inequality(I, m + 1, N) for I in subsets(N) if len(I) % 2 == m % 2]


@dataclass(frozen=True)
class NamedCones:
    """
    The four named polytopes for one n.

    Attributes:
        n: Even dimension
        polytopes: Name -> polytope in slice coordinates
    """

    n: int
    polytopes: Dict[str, AffinePolytope]

    def __getitem__(self, name: str) -> AffinePolytope:
        return self.polytopes[name]

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(self.polytopes)

    def x_cone(self, name: str, basis: str = None) -> RationalCone:
        """Cone over the named polytope, as a cone in H^2(X)."""
        space = make_space(self.n, Side.XSIDE)
        normals = [slice_inequality_to_cone(q, self.n, basis) for q in self[name].inequalities]
        return cone_from_facets(normals, ambient=space, basis=basis)

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "polytopes": {name: p.to_dict() for name, p in self.polytopes.items()},
            "fano_inequalities_antiK_E": [
                {"label": label, "normal": list(f)} for label, f in fano_anticanonical_inequalities(self.n)
            ],
        }


@lru_cache(maxsize=None)
def named_cones(n: int) -> NamedCones:
    """
    Delta, Delta_Mov, Delta_Nef and Delta_Fano with irredundant facet lists.

    Delta_Nef and Delta_Fano are cut out inside Delta; the bounds of Delta
    are redundant for both and disappear from the facet lists.

    Raises:
        ValidationError: If n is odd
    """
    validate_even_dimension(n)
    N = n + 3
    logger.info("Building the named polytopes for n=%d", n)
    box = demihypercube_inequalities(N)
    polytopes = {
        DELTA: demihypercube(N),
        DELTA_MOV: AffinePolytope.from_inequalities(mov_inequalities(n), slice=DELTA_MOV),
        DELTA_NEF: AffinePolytope.from_inequalities(nef_inequalities(n) + box, slice=DELTA_NEF),
        DELTA_FANO: AffinePolytope.from_inequalities(fano_inequalities(n) + box, slice=DELTA_FANO),
    }
    for name, polytope in polytopes.items():
        logger.debug("%s: %r", name, polytope)
    return NamedCones(n, polytopes)


def fano_anticanonical_inequalities(n: int) -> List[Tuple[str, IntVector]]:
    """
    Facets of Nef(X_Fano) on (z, t_1..t_N), the coordinates of the
    (-K_X, E_1..E_N) basis: 2z + (|I|-m) sum t_i - 2 sum_{i in I} t_i >= 0,
    reduced to primitive vectors.
    """
    validate_even_dimension(n)
    m = n // 2
    rows = []
    for I in subsets(n + 3):
        if len(I) % 2 == m % 2:
            name = "I={" + ",".join(str(i) for i in sorted_subset(I)) + "}"
            q = H_inequality(I, m + 1, n + 3)
            rows.append((name, slice_inequality_to_cone(q, n, X_ANTICANONICAL_BASIS)))
    return rows


def box_faces(n: int) -> List[Tuple[SliceInequality, List[Vector]]]:
    """
    The faces alpha_i = -1/2 and alpha_i = 1/2 of Delta, each paired with
    the vertices of Delta_Mov lying on it.

    For n >= 4 every such face is a facet of Delta_Mov. For n = 2 each one
    meets Delta_Mov in the single vertex alpha_i = +-1/2, alpha_j = 0.
    """
    N = n + 3
    mov = named_cones(n)[DELTA_MOV]
    return [(q, mov.vertices_on(q)) for q in demihypercube_inequalities(N)[:2 * N]]
