"""
The two rank-(n+4) quadratic lattices and their registered bases.

ZSide: middle cohomology of the intersection of two quadrics, with the
orthogonal basis {eta, eps_1..eps_N} (N = n+3) relative to the base plane
M_0 = M_{}. XSide: Picard lattice of the blow-up of P^n at N points with the
Dolgachev pairing in the basis {H, E_1..E_N}.
"""

import logging
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import sympy
from sympy.matrices.normalforms import hermite_normal_form

from quadric_lattices.core.constants import (
    Side,
    X_ANTICANONICAL_BASIS,
    X_EPS_TILDE_BASIS,
    X_STANDARD_BASIS,
    Z_EPS_BASIS,
    Z_PLANES_BASIS,
)
from quadric_lattices.core.validators import validate_even_dimension, validate_index, validate_subset
from quadric_lattices.lattice.lattice_class import LatticeClass
from quadric_lattices.utils.calculations import (
    Matrix,
    Vector,
    from_sympy,
    inverse,
    mat_mul,
    mat_vec,
    subsets,
    to_fraction,
    to_sympy,
    transpose,
)
from quadric_lattices.utils.exceptions import ValidationError

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


class LatticeSpace:
    """
    One of the two quadratic lattices for a fixed even n = 2m.

    Bases are stored as matrices whose columns are the basis vectors written
    in the orthogonal (canonical) basis of the side.

    Attributes:
        n: Even dimension n = 2m
        side: ZSide or XSide
        m: n // 2
        N: Number of points / eps vectors, n + 3
        rank: Lattice rank, n + 4
    """

    def __init__(self, n: int, side: Side):
        validate_even_dimension(n)
        if not isinstance(side, Side):
            raise ValidationError(f"side must be a Side, got {side!r}")
        self.n = n
        self.side = side
        self.m = n // 2
        self.N = n + 3
        self.rank = n + 4
        self._bases: Dict[str, Matrix] = {}
        self._inverses: Dict[str, Matrix] = {}
        self._register_bases()

    # ------------------------------------------------------------------
    # bases and form

    @property
    def canonical_basis(self) -> str:
        return Z_EPS_BASIS if self.side == Side.ZSIDE else X_STANDARD_BASIS

    @property
    def basis_names(self) -> Tuple[str, ...]:
        return tuple(self._bases)

    @cached_property
    def form_diagonal(self) -> Vector:
        """Diagonal of the Gram matrix in the canonical basis."""
        if self.side == Side.ZSIDE:
            sign = Fraction((-1) ** self.m)
            return (Fraction(4),) + (sign,) * self.N
        return (Fraction(self.n - 1),) + (Fraction(-1),) * self.N

    @cached_property
    def form_eps(self) -> Matrix:
        """Gram matrix in the canonical orthogonal basis."""
        diag = self.form_diagonal
        return tuple(
            tuple(diag[i] if i == j else Fraction(0) for j in range(self.rank))
            for i in range(self.rank)
        )

    def _register_bases(self) -> None:
        N = self.N
        unit = [[Fraction(int(i == j)) for j in range(self.rank)] for i in range(self.rank)]
        if self.side == Side.ZSIDE:
            self._register(Z_EPS_BASIS, unit)
            # columns: eta, M_1, ..., M_N
            columns = [unit[0]] + [list(self.plane_vector(frozenset({i}))) for i in range(1, N + 1)]
            self._register(Z_PLANES_BASIS, transpose(columns))
        else:
            self._register(X_STANDARD_BASIS, unit)
            anticanonical = [Fraction(self.n + 1)] + [Fraction(-(self.n - 1))] * N
            columns = [anticanonical] + [unit[i] for i in range(1, N + 1)]
            self._register(X_ANTICANONICAL_BASIS, transpose(columns))
            tilde = [anticanonical]
            for i in range(1, N + 1):
                tilde.append([HALF] + [HALF if j == i else -HALF for j in range(1, N + 1)])
            self._register(X_EPS_TILDE_BASIS, transpose(tilde))

    def _register(self, name: str, matrix: Sequence[Sequence[Fraction]]) -> None:
        frozen = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        self._bases[name] = frozen
        self._inverses[name] = inverse(frozen)
        logger.debug("Registered basis %s on %s", name, self)

    def basis_matrix(self, name: str) -> Matrix:
        """Columns are the basis vectors in canonical coordinates."""
        self._check_basis(name)
        return self._bases[name]

    def basis_inverse(self, name: str) -> Matrix:
        self._check_basis(name)
        return self._inverses[name]

    def _check_basis(self, name: str) -> None:
        if name not in self._bases:
            raise ValidationError(
                f"Unknown basis '{name}' for {self}; registered: {', '.join(self._bases)}"
            )

    def gram(self, basis: str = None) -> Matrix:
        """Gram matrix of the form in the given basis (canonical by default)."""
        basis = basis or self.canonical_basis
        P = self.basis_matrix(basis)
        return mat_mul(mat_mul(transpose(P), self.form_eps), P)

    def check_same(self, other: "LatticeSpace") -> None:
        if self != other:
            raise ValidationError(f"Mismatched spaces: {self} vs {other}")

    # ------------------------------------------------------------------
    # elements

    def element(self, coords: Iterable, basis: str = None) -> LatticeClass:
        return LatticeClass(self, tuple(coords), basis or self.canonical_basis)

    def zero(self) -> LatticeClass:
        return self.element([0] * self.rank)

    def unit(self, index: int) -> LatticeClass:
        """Canonical basis vector number index (0 is eta or H)."""
        return self.element([int(i == index) for i in range(self.rank)])

    def _require(self, side: Side) -> None:
        if self.side != side:
            raise ValidationError(f"Operation requires a {side.value}-side space, got {self}")

    def eta(self) -> LatticeClass:
        self._require(Side.ZSIDE)
        return self.unit(0)

    def eps(self, i: int) -> LatticeClass:
        self._require(Side.ZSIDE)
        validate_index(i, self.N, "i")
        return self.unit(i)

    def plane_vector(self, I: FrozenSet[int]) -> Vector:
        """
        Canonical coordinates of M_I = 1/4 eta + (-1)^|I|/2 (sum_{j not in I} eps_j - sum_{i in I} eps_i).
        """
        self._require(Side.ZSIDE)
        I = validate_subset(I, self.N, "I")
        sign = HALF if len(I) % 2 == 0 else -HALF
        return (QUARTER,) + tuple(-sign if j in I else sign for j in range(1, self.N + 1))

    def plane(self, I: Iterable[int]) -> LatticeClass:
        return self.element(self.plane_vector(frozenset(I)))

    def H(self) -> LatticeClass:
        self._require(Side.XSIDE)
        return self.unit(0)

    def E(self, i: int) -> LatticeClass:
        self._require(Side.XSIDE)
        validate_index(i, self.N, "i")
        return self.unit(i)

    def anticanonical(self) -> LatticeClass:
        """-K_X = (n+1)H - (n-1) sum E_i."""
        self._require(Side.XSIDE)
        return self.element([self.n + 1] + [-(self.n - 1)] * self.N)

    def eps_tilde(self, i: int) -> LatticeClass:
        """eps~_i = 1/2 (H - sum_{j != i} E_j + E_i)."""
        self._require(Side.XSIDE)
        validate_index(i, self.N, "i")
        return self.element([HALF] + [HALF if j == i else -HALF for j in range(1, self.N + 1)])

    # ------------------------------------------------------------------
    # form

    def pair(self, x: LatticeClass, y: LatticeClass) -> Fraction:
        """
        Symmetric bilinear form.

        Raises:
            ValidationError: If x or y does not live in this space
        """
        self.check_same(x.space)
        self.check_same(y.space)
        return sum(
            (d * a * b for d, a, b in zip(self.form_diagonal, x.canonical, y.canonical)),
            Fraction(0),
        )

    def functional(self, x: LatticeClass, basis: str = None) -> Vector:
        """
        Row vector f with f . coords_basis(y) = pair(x, y) for every y.
        """
        self.check_same(x.space)
        basis = basis or self.canonical_basis
        weighted = tuple(d * c for d, c in zip(self.form_diagonal, x.canonical))
        return mat_vec(transpose(self.basis_matrix(basis)), weighted)

    # ------------------------------------------------------------------
    # integrality

    @cached_property
    def _generator_hnf_inverse(self) -> sympy.Matrix:
        """Inverse of the square HNF of 4 x (the M_I generator matrix)."""
        self._require(Side.ZSIDE)
        columns = [self.plane_vector(I) for I in subsets(self.N) if len(I) % 2 == 0]
        scaled = sympy.Matrix([[int(4 * v[r]) for v in columns] for r in range(self.rank)])
        hnf = hermite_normal_form(scaled)
        keep = [j for j in range(hnf.cols) if any(hnf[i, j] != 0 for i in range(hnf.rows))]
        hnf = hnf[:, keep]
        if hnf.rows != hnf.cols:
            raise ValidationError(f"Plane classes do not span {self} (HNF shape {hnf.shape})")
        logger.debug("Cached HNF of %d plane generators on %s", len(columns), self)
        return hnf.inv()

    def is_integral(self, x: LatticeClass) -> bool:
        """True iff x lies in the Z-span of the plane classes M_I."""
        self._require(Side.ZSIDE)
        self.check_same(x.space)
        target = to_sympy([[4 * c] for c in x.canonical])
        solution = self._generator_hnf_inverse * target
        return all(entry.is_integer for entry in solution)

    def integral_basis(self) -> List[LatticeClass]:
        """A Z-basis of the plane lattice (columns of the HNF)."""
        hnf = self._generator_hnf_inverse.inv()
        rows = from_sympy(hnf)
        return [
            self.element([rows[r][c] / 4 for r in range(self.rank)])
            for c in range(self.rank)
        ]

    def lattice_determinant(self) -> Fraction:
        """Determinant of the form on the plane lattice; +-1 when unimodular."""
        basis = [b.canonical for b in self.integral_basis()]
        gram = [[self.pair(self.element(a), self.element(b)) for b in basis] for a in basis]
        return to_fraction(to_sympy(gram).det())

    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticeSpace):
            return NotImplemented
        return self.n == other.n and self.side == other.side

    def __hash__(self) -> int:
        return hash((self.n, self.side))

    def __repr__(self) -> str:
        return f"LatticeSpace(n={self.n}, side={self.side.value})"


@lru_cache(maxsize=None)
def make_space(n: int, side: Side) -> LatticeSpace:
    """
    Build (or fetch) the lattice space for even n on the requested side.

    Raises:
        ValidationError: If n is odd or nonpositive
    """
    return LatticeSpace(n, side)


def pair(x: LatticeClass, y: LatticeClass) -> Fraction:
    """Bilinear form value; basis independent."""
    return x.space.pair(x, y)


def convert(x: LatticeClass, target_basis: str) -> LatticeClass:
    """Rewrite x in another registered basis."""
    return x.convert(target_basis)


def is_integral(x: LatticeClass) -> bool:
    """Membership in the Z-span of the plane classes (ZSide only)."""
    return x.space.is_integral(x)
