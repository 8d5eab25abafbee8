"""
Linear maps between the lattices: h~_M: H^2(X) -> H^n(Z), relabelings of
the exceptional divisors, and the Cremona pullbacks omega_ij^*.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Sequence

from quadric_lattices.core.constants import Side, X_ANTICANONICAL_BASIS, Z_EPS_BASIS
from quadric_lattices.core.validators import validate_even_dimension, validate_index
from quadric_lattices.lattice.lattice_class import LatticeClass
from quadric_lattices.lattice.space import LatticeSpace, make_space
from quadric_lattices.planes.labels import PlaneLabel, plane_class
from quadric_lattices.utils.calculations import (
    Matrix,
    identity,
    inverse,
    mat_mul,
    mat_vec,
    rational_pair,
    to_vector,
    transpose,
)
from quadric_lattices.utils.exceptions import ValidationError
from quadric_lattices.weyl.element import WeylElement

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LatticeMap:
    """
    A linear map source -> target written in declared bases.

    Column j of the matrix holds the image of the j-th source basis vector
    in target_basis coordinates.
    """

    source: LatticeSpace
    target: LatticeSpace
    matrix: Matrix
    source_basis: str
    target_basis: str
    name: str = ""

    def __post_init__(self):
        rows = tuple(to_vector(row) for row in self.matrix)
        if len(rows) != self.target.rank or any(len(r) != self.source.rank for r in rows):
            raise ValidationError(
                f"Matrix must be {self.target.rank}x{self.source.rank} for {self.source} -> {self.target}"
            )
        object.__setattr__(self, "matrix", rows)
        self.source.basis_matrix(self.source_basis)
        self.target.basis_matrix(self.target_basis)

    @classmethod
    def from_images(
        cls,
        source: LatticeSpace,
        source_basis: str,
        images: Sequence[LatticeClass],
        target_basis: str = None,
        name: str = "",
    ) -> "LatticeMap":
        """The map sending the source basis vectors to the given classes, in order."""
        if not images:
            raise ValidationError("At least one image is required")
        target = images[0].space
        target_basis = target_basis or target.canonical_basis
        columns = [x.convert(target_basis).coords for x in images]
        return cls(source, target, transpose(columns), source_basis, target_basis, name)

    def canonical_matrix(self) -> Matrix:
        """Matrix from canonical source coordinates to canonical target coordinates."""
        P_target = self.target.basis_matrix(self.target_basis)
        P_source_inv = self.source.basis_inverse(self.source_basis)
        return mat_mul(mat_mul(P_target, self.matrix), P_source_inv)

    def matrix_in(self, source_basis: str, target_basis: str) -> Matrix:
        """Matrix of the same map in other bases."""
        P_source = self.source.basis_matrix(source_basis)
        P_target_inv = self.target.basis_inverse(target_basis)
        return mat_mul(mat_mul(P_target_inv, self.canonical_matrix()), P_source)

    def apply(self, x: LatticeClass) -> LatticeClass:
        self.source.check_same(x.space)
        coords = mat_vec(self.matrix, x.convert(self.source_basis).coords)
        return self.target.element(coords, self.target_basis)

    __call__ = apply

    def compose(self, other: "LatticeMap") -> "LatticeMap":
        """self o other (apply other first)."""
        self.source.check_same(other.target)
        inner = other.matrix_in(other.source_basis, self.source_basis)
        name = f"{self.name} o {other.name}" if self.name and other.name else ""
        return LatticeMap(other.source, self.target, mat_mul(self.matrix, inner),
                          other.source_basis, self.target_basis, name)

    def inverse(self) -> "LatticeMap":
        """
        Raises:
            ValidationError: If the map is not invertible
        """
        if self.source.rank != self.target.rank:
            raise ValidationError("Only square maps can be inverted")
        name = f"({self.name})^-1" if self.name else ""
        return LatticeMap(self.target, self.source, inverse(self.matrix),
                          self.target_basis, self.source_basis, name)

    def is_identity(self) -> bool:
        return self.source == self.target and self.canonical_matrix() == identity(self.source.rank)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, LatticeMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.canonical_matrix() == other.canonical_matrix()
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.canonical_matrix()))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "source": {"n": self.source.n, "side": self.source.side.value, "basis": self.source_basis},
            "target": {"n": self.target.n, "side": self.target.side.value, "basis": self.target_basis},
            "matrix": [[rational_pair(x) for x in row] for row in self.matrix],
        }

    def __repr__(self) -> str:
        return f"LatticeMap({self.name or 'unnamed'}: {self.source} -> {self.target})"


def h_tilde(L: PlaneLabel) -> LatticeMap:
    """
    h~_M: H^2(X) -> H^n(Z) with -K_X -> eta and E_i -> sigma_i(M), M = M_L.
    """
    x_space = make_space(L.n, Side.XSIDE)
    z_space = make_space(L.n, Side.ZSIDE)
    images = [z_space.eta()] + [plane_class(L.flipped({i})) for i in range(1, L.N + 1)]
    return LatticeMap.from_images(x_space, X_ANTICANONICAL_BASIS, images, Z_EPS_BASIS, f"h~_{L!r}")


def relabel(kappa: Sequence[int], n: int) -> LatticeMap:
    """
    XSide map fixing H with E_i -> E_{kappa(i)} (kappa 1-based).

    Raises:
        ValidationError: If kappa is not a permutation of 1..n+3
    """
    validate_even_dimension(n)
    N = n + 3
    if sorted(kappa) != list(range(1, N + 1)):
        raise ValidationError(f"kappa must be a permutation of 1..{N}, got {list(kappa)}")
    space = make_space(n, Side.XSIDE)
    images = [space.H()] + [space.E(kappa[i - 1]) for i in range(1, N + 1)]
    return LatticeMap.from_images(space, space.canonical_basis, images, name=f"relabel{tuple(kappa)}")


def weyl_map(w: WeylElement, n: int) -> LatticeMap:
    """A Weyl group element as a ZSide lattice map."""
    validate_even_dimension(n)
    space = make_space(n, Side.ZSIDE)
    if w.N != space.N:
        raise ValidationError(f"Element acts on N={w.N}, space has N={space.N}")
    return LatticeMap(space, space, w.matrix(), Z_EPS_BASIS, Z_EPS_BASIS, repr(w))


def cremona_pullback(i: int, j: int, n: int) -> LatticeMap:
    """
    omega_ij^* on H^2(X) in the (H, E) basis.

    H -> nH - (n-1) sum_{h != i,j} E_h, E_i <-> E_j, and
    E_r -> H - sum_h E_h + E_i + E_j + E_r for r != i, j. The sum in the
    image of H runs over the n+1 indices other than i and j, so that -K_X
    is fixed.

    Raises:
        ValidationError: If i == j or an index is out of range
    """
    validate_even_dimension(n)
    N = n + 3
    validate_index(i, N, "i")
    validate_index(j, N, "j")
    if i == j:
        raise ValidationError(f"Cremona pullback needs i != j, got i=j={i}")
    i, j = min(i, j), max(i, j)
    space = make_space(n, Side.XSIDE)
    H = space.H()
    rest = [h for h in range(1, N + 1) if h not in (i, j)]
    everything = sum((space.E(h) for h in range(1, N + 1)), space.zero())
    images = [H * n - sum((space.E(h) for h in rest), space.zero()) * (n - 1)]
    for r in range(1, N + 1):
        if r == i:
            images.append(space.E(j))
        elif r == j:
            images.append(space.E(i))
        else:
            images.append(H - everything + space.E(i) + space.E(j) + space.E(r))
    logger.debug("Cremona pullback omega_%d%d on n=%d", i, j, n)
    return LatticeMap.from_images(space, space.canonical_basis, images, name=f"omega_{i},{j}^*")


def conjugate_to_Z(f: LatticeMap, L: PlaneLabel) -> LatticeMap:
    """h~_M o f o h~_M^-1 for an XSide endomorphism f."""
    h = h_tilde(L)
    return h.compose(f).compose(h.inverse())


def restricted_form_scale(L: PlaneLabel) -> Fraction:
    """
    The scalar c with pair_Z(h~x, h~y) = c * pair_X(x, y) on (-K_X)^perp,
    read off E_1 - E_2.
    """
    x_space = make_space(L.n, Side.XSIDE)
    h = h_tilde(L)
    a = x_space.E(1) - x_space.E(2)
    return h(a).pair(h(a)) / a.pair(a)
