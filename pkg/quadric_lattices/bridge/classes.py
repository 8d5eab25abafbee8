"""
Divisor and curve classes on G.

H^2(G) and N_1(G) are both written in the coordinates of H^n(Z): beta and
alpha^-1 are identities on coordinates, and the pairing of a divisor with a
curve is the intersection form of Z.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

from quadric_lattices.cones.named import delta, eta_M
from quadric_lattices.core.constants import CurveKind, Family, Side
from quadric_lattices.core.validators import validate_even_dimension, validate_index
from quadric_lattices.lattice.lattice_class import LatticeClass
from quadric_lattices.lattice.space import make_space
from quadric_lattices.planes.labels import PlaneLabel, plane_class
from quadric_lattices.utils.calculations import rational_pair
from quadric_lattices.utils.exceptions import ValidationError

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class _GClass:
    vector: LatticeClass
    name: str = ""

    def __post_init__(self):
        if self.vector.space.side != Side.ZSIDE:
            raise ValidationError(f"Classes on G use ZSide coordinates, got {self.vector.space}")

    @property
    def n(self) -> int:
        return self.vector.space.n

    def to_dict(self) -> Dict:
        return {"name": self.name, "ray": [rational_pair(c) for c in self.vector.canonical]}


@dataclass(frozen=True)
class DivisorClass(_GClass):
    """A class in H^2(G), beta of its coordinate vector."""

    def dot(self, curve: "CurveClass") -> Fraction:
        """Intersection number with a curve class."""
        if not isinstance(curve, CurveClass):
            raise ValidationError(f"Divisors pair with curves, got {type(curve).__name__}")
        return self.vector.pair(curve.vector)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.vector + other.vector)

    def __mul__(self, scalar) -> "DivisorClass":
        return DivisorClass(self.vector * scalar)


@dataclass(frozen=True)
class CurveClass(_GClass):
    """A class in N_1(G), alpha^-1 of its coordinate vector."""

    def dot(self, divisor: DivisorClass) -> Fraction:
        return divisor.dot(self)

    def __add__(self, other: "CurveClass") -> "CurveClass":
        return CurveClass(self.vector + other.vector)


def anticanonical_G(n: int) -> DivisorClass:
    """-K_G = beta(eta)."""
    return DivisorClass(make_space(n, Side.ZSIDE).eta(), "-K_G")


def beta_class(L: PlaneLabel) -> DivisorClass:
    """E_M = beta(M)."""
    return DivisorClass(plane_class(L), f"E_M, M={L.name()}")


def alpha_inv(L: PlaneLabel) -> CurveClass:
    """l_M = alpha^-1(M), the line class of the plane M*."""
    return CurveClass(plane_class(L), f"l_M, M={L.name()}")


def class_H_M(L: PlaneLabel) -> DivisorClass:
    """H_M = m(-K_G) - (n-1) E_M."""
    vector = anticanonical_G(L.n).vector * L.m - plane_class(L) * (L.n - 1)
    return DivisorClass(vector, f"H_M, M={L.name()}")


def exceptional_divisors(L: PlaneLabel) -> List[DivisorClass]:
    """E_{sigma_1(M)}, ..., E_{sigma_{n+3}(M)}: the divisors contracted by rho_M."""
    return [beta_class(L.flipped({i})) for i in range(1, L.N + 1)]


def fiber_vector(family: Family, i: int, n: int) -> LatticeClass:
    """
    General fiber of phi_i (1/2 eta - eps_i) or psi_i (1/2 eta + eps_i).
    """
    validate_even_dimension(n)
    space = make_space(n, Side.ZSIDE)
    validate_index(i, space.N, "i")
    sign = -1 if family == Family.T_PHI else 1
    return space.eta() * HALF + space.eps(i) * sign


def curve_class(
    kind: CurveKind,
    L: Optional[PlaneLabel] = None,
    i: Optional[int] = None,
    n: Optional[int] = None,
) -> CurveClass:
    """
    Named curve classes on G.

    Args:
        kind: line l_M, d_M, e_M, phi_i fiber, psi_i fiber or elliptic c
        L: Plane label (line, d, e)
        i: Index (fibers)
        n: Even dimension (fibers, elliptic); taken from L when omitted

    Raises:
        ValidationError: If a required argument is missing
    """
    if n is None and L is not None:
        n = L.n
    if kind in (CurveKind.LINE, CurveKind.ANTICANONICAL, CurveKind.EXCEPTIONAL_LINE):
        if L is None:
            raise ValidationError(f"{kind.value} needs a plane label")
        if kind == CurveKind.LINE:
            return alpha_inv(L)
        if kind == CurveKind.ANTICANONICAL:
            return CurveClass(delta(L), f"d_M, M={L.name()}")
        return CurveClass(eta_M(L), f"e_M, M={L.name()}")
    if n is None:
        raise ValidationError(f"{kind.value} needs n")
    if kind == CurveKind.ELLIPTIC:
        return CurveClass(make_space(n, Side.ZSIDE).eta(), "c")
    if i is None:
        raise ValidationError(f"{kind.value} needs an index i")
    if kind == CurveKind.PHI_FIBER:
        return CurveClass(fiber_vector(Family.T_PHI, i, n), f"phi_{i} fiber")
    return CurveClass(fiber_vector(Family.T_PSI, i, n), f"psi_{i} fiber")


def fiber_contraction_divisor(family: Family, i: int, n: int) -> DivisorClass:
    """
    The Nef(G) ray 1/2 eta + s eps_i vanishing on the fibers of phi_i
    (s = (-1)^m) or psi_i (s = -(-1)^m).
    """
    validate_even_dimension(n)
    space = make_space(n, Side.ZSIDE)
    validate_index(i, space.N, "i")
    sign = (-1) ** (n // 2)
    if family == Family.T_PSI:
        sign = -sign
    name = f"D_phi_{i}" if family == Family.T_PHI else f"D_psi_{i}"
    return DivisorClass(space.eta() * HALF + space.eps(i) * sign, name)
