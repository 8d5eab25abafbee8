"""
The cones of G in ZSide coordinates, with named ray inventories.

NE(G) = alpha^-1(E), Eff(G) = beta(E), Nef(G) = beta(E^dual) and
Mov_1(G) = alpha^-1(E^dual) share coordinates, so each pair is one
RationalCone read with two meanings. Mov^1(G) is the image under h~_{M_0}
of the cone over Delta_Mov.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

from quadric_lattices.bridge.classes import (
    CurveClass,
    DivisorClass,
    alpha_inv,
    beta_class,
    curve_class,
    fiber_contraction_divisor,
)
from quadric_lattices.bridge.maps import h_tilde
from quadric_lattices.cones.cone import RationalCone, cone_from_rays, dual, face_of
from quadric_lattices.cones.named import cone_E, cone_E_dual, delta
from quadric_lattices.core.constants import CurveKind, Family, Side, Z_EPS_BASIS
from quadric_lattices.core.validators import validate_even_dimension
from quadric_lattices.lattice.space import make_space
from quadric_lattices.mcd.divisors import lift_point
from quadric_lattices.mcd.named_cones import DELTA_MOV, named_cones
from quadric_lattices.planes.labels import PlaneLabel, all_labels, plane_class
from quadric_lattices.utils.calculations import IntVector, primitive, sorted_subset
from quadric_lattices.utils.exceptions import ComputationError

logger = logging.getLogger(__name__)

NE = "NE(G)"
NEF = "Nef(G)"
EFF = "Eff(G)"
MOV_1 = "Mov_1(G)"
MOV1 = "Mov^1(G)"
MOV1_DUAL = "Mov^1(G)^dual"

CONE_NAMES = (NE, NEF, EFF, MOV_1, MOV1, MOV1_DUAL)


def ray_of(x) -> IntVector:
    """Primitive (eta, eps) coordinates of a ZSide class or a G class."""
    vector = getattr(x, "vector", x)
    return primitive(vector.convert(Z_EPS_BASIS).coords)


def _inventory(cone: RationalCone, named: Sequence[Tuple[str, object]]) -> List[Dict]:
    """
    Each ray of the cone with the first name whose class spans it.

    Raises:
        ComputationError: If a ray has no name
    """
    names: Dict[IntVector, str] = {}
    for name, x in named:
        names.setdefault(ray_of(x), name)
    rows = []
    for r in sorted(cone.rays):
        if r not in names:
            raise ComputationError(f"Ray {list(r)} has no name in the inventory")
        rows.append({"ray": list(r), "name": names[r]})
    return rows


def _fiber_curves(n: int) -> List[Tuple[str, CurveClass]]:
    rows = []
    for i in range(1, n + 4):
        for kind in (CurveKind.PHI_FIBER, CurveKind.PSI_FIBER):
            c = curve_class(kind, i=i, n=n)
            rows.append((c.name, c))
    return rows


def _fiber_divisors(n: int) -> List[Tuple[str, DivisorClass]]:
    rows = []
    for i in range(1, n + 4):
        for family in (Family.T_PHI, Family.T_PSI):
            D = fiber_contraction_divisor(family, i, n)
            rows.append((D.name, D))
    return rows


def _sum_lines(n: int) -> List[Tuple[str, CurveClass]]:
    """l_M + l_{sigma_i(M)}; these coincide for many (M, i)."""
    rows = []
    for L in all_labels(n):
        for i in range(1, n + 4):
            c = alpha_inv(L) + alpha_inv(L.flipped({i}))
            rows.append((f"l_M + l_sigma_{i}(M), M={L.name()}", c))
    return rows


def movable_divisor_cone(n: int) -> RationalCone:
    """Mov^1(G): h~_{M_0} of the cone over the vertices of Delta_Mov."""
    h = h_tilde(PlaneLabel(n, frozenset()))
    space = make_space(n, Side.ZSIDE)
    images = [h(lift_point(v, n)) for v in named_cones(n)[DELTA_MOV].vertices]
    return cone_from_rays(images, space, Z_EPS_BASIS)


@dataclass(frozen=True)
class GCones:
    """
    The six cones of G and the names of their rays.

    Attributes:
        n: Even dimension
        cones: Cone name -> RationalCone in the (eta, eps) basis
        inventories: Cone name -> [{"ray": [...], "name": ...}]
    """

    n: int
    cones: Dict[str, RationalCone]
    inventories: Dict[str, List[Dict]]

    def __getitem__(self, name: str) -> RationalCone:
        return self.cones[name]

    def ray_counts(self) -> Dict[str, int]:
        return {name: len(self.cones[name].rays) for name in CONE_NAMES}

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "basis": Z_EPS_BASIS,
            "cones": {
                name: {
                    "rays": self.inventories[name],
                    "facets": [list(f) for f in sorted(self.cones[name].facets)],
                }
                for name in CONE_NAMES
            },
        }


@lru_cache(maxsize=None)
def G_cones(n: int) -> GCones:
    """
    NE(G), Nef(G), Eff(G), Mov_1(G), Mov^1(G) and the dual of Mov^1(G).

    Raises:
        ValidationError: If n is not an even integer >= 2
        ComputationError: If a ray escapes its named inventory
    """
    validate_even_dimension(n)
    labels = all_labels(n)
    E = cone_E(n)
    E_dual = cone_E_dual(n)
    mov1 = movable_divisor_cone(n)
    mov1_dual = dual(mov1)

    lines = [(c.name, c) for c in map(alpha_inv, labels)]
    exceptional = [(D.name, D) for D in map(beta_class, labels)]
    d_curves = [(c.name, c) for c in (curve_class(CurveKind.ANTICANONICAL, L) for L in labels)]
    e_curves = [(c.name, c) for c in (curve_class(CurveKind.EXCEPTIONAL_LINE, L) for L in labels)]
    nef_divisors = [(f"D_M, M={L.name()}", delta(L)) for L in labels] + _fiber_divisors(n)
    h = h_tilde(PlaneLabel(n, frozenset()))
    mov1_named = [
        (f"h~(lift({', '.join(str(a) for a in v)}))", h(lift_point(v, n)))
        for v in named_cones(n)[DELTA_MOV].vertices
    ]

    cones = {NE: E, NEF: E_dual, EFF: E, MOV_1: E_dual, MOV1: mov1, MOV1_DUAL: mov1_dual}
    inventories = {
        NE: _inventory(E, lines),
        NEF: _inventory(E_dual, nef_divisors),
        EFF: _inventory(E, exceptional),
        MOV_1: _inventory(E_dual, d_curves + _fiber_curves(n)),
        MOV1: _inventory(mov1, mov1_named),
        MOV1_DUAL: _inventory(mov1_dual, e_curves + lines + _sum_lines(n)),
    }
    logger.info("Cones of G for n=%d: %s", n, {k: len(v.rays) for k, v in cones.items()})
    return GCones(n, cones, inventories)


def label_of_ray(n: int) -> Dict[IntVector, PlaneLabel]:
    """Primitive ray of M_L -> L."""
    return {ray_of(plane_class(L)): L for L in all_labels(n)}


def simplicial_facets(n: int) -> List[FrozenSet[PlaneLabel]]:
    """
    Simplicial facets of Eff(G) = beta(E), as the label sets of their rays.

    A facet of a full-dimensional cone in dimension n+4 is simplicial when it
    carries exactly n+3 rays.
    """
    validate_even_dimension(n)
    E = cone_E(n)
    labels = label_of_ray(n)
    found = []
    for f in E.facets:
        on_facet = E.ray_zero_set(f)
        if len(on_facet) == E.dim - 1:
            found.append(frozenset(labels[r] for r in on_facet))
    found.sort(key=lambda s: sorted(sorted_subset(L.rep) for L in s))
    return found


def contraction_face(family: Family, i: int, n: int) -> RationalCone:
    """
    The face of NE(G) contracted by phi_i (T_phi) or psi_i (T_psi): the
    face of E on which the Nef ray D_phi_i or D_psi_i vanishes.
    """
    D = fiber_contraction_divisor(family, i, n)
    return face_of(cone_E(n), D.vector)


def face_labels(face: RationalCone) -> List[PlaneLabel]:
    """Labels of the plane classes spanning a face of E."""
    labels = label_of_ray(face.ambient.n)
    return sorted((labels[r] for r in face.rays), key=lambda L: (len(L.rep), sorted_subset(L.rep)))
