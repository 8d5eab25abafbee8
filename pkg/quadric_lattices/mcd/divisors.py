"""
Divisor classes E_I on X, the special subvarieties J_{I,s}, and the radial
projection of H^2(X) onto the slice {(n+1)y + sum x_i = 1}.

XSide coordinates (y, x_1..x_N) are those of the (H, E_1..E_N) basis.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence

from quadric_lattices.cones.polytope import SliceInequality
from quadric_lattices.core.constants import Side, X_EPS_TILDE_BASIS
from quadric_lattices.core.validators import (
    validate_even_dimension,
    validate_index,
    validate_length,
    validate_non_negative,
    validate_subset,
)
from quadric_lattices.lattice.lattice_class import LatticeClass
from quadric_lattices.lattice.space import make_space
from quadric_lattices.utils.calculations import IntVector, mat_vec, primitive, sorted_subset, subsets, to_vector, transpose
from quadric_lattices.utils.exceptions import ValidationError

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def _subset_name(I: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted_subset(I)) + "}"


@dataclass(frozen=True)
class SpecialVariety:
    """
    J_{I,s}: strict transform in X of Join(<p_i : i in I>, Sec_{s-1}(C)).

    Attributes:
        n: Even dimension of the ambient P^n
        I: Index set of the points spanned, |I| = d <= n
        s: Secant order, 0 <= s <= (n - d) / 2
    """

    n: int
    I: FrozenSet[int]
    s: int

    def __post_init__(self):
        validate_even_dimension(self.n)
        subset = validate_subset(self.I, self.n + 3, "I")
        object.__setattr__(self, "I", subset)
        validate_non_negative(self.s, "s")
        if len(subset) > self.n:
            raise ValidationError(f"|I| must be at most n={self.n}, got {len(subset)}")
        if 2 * self.s > self.n - len(subset):
            raise ValidationError(
                f"s must satisfy 2s <= n - |I| = {self.n - len(subset)}, got s={self.s}"
            )

    @property
    def d(self) -> int:
        return len(self.I)

    @property
    def dim(self) -> int:
        return self.d + 2 * self.s - 1

    @property
    def is_divisorial(self) -> bool:
        return self.d + 2 * self.s == self.n

    def divisor_class(self) -> LatticeClass:
        """
        Class E_I of a divisorial J_{I,s}.

        Raises:
            ValidationError: If J_{I,s} is not a divisor
        """
        if not self.is_divisorial:
            raise ValidationError(f"{self.name()} has dimension {self.dim}, not n-1={self.n - 1}")
        return class_E_I(self.I, self.n)

    def description(self) -> str:
        points = ", ".join(f"p_{i}" for i in sorted_subset(self.I))
        if self.s == 0:
            return f"span of {points}"
        secant = "C" if self.s == 1 else f"Sec_{self.s - 1}(C)"
        if not self.I:
            return secant
        return f"join of {points} with {secant}"

    def name(self) -> str:
        return f"J_{{{_subset_name(self.I)},{self.s}}}"

    def to_dict(self) -> Dict:
        return {"I": list(sorted_subset(self.I)), "s": self.s, "dim": self.dim}

    def __repr__(self) -> str:
        return self.name()


@dataclass(frozen=True)
class TraceLocus:
    """J^i_{I,s}: the analogous join inside E_i = P^(n-1), built on the points q_j."""

    i: int
    I: FrozenSet[int]
    s: int

    @property
    def dim(self) -> int:
        return len(self.I) + 2 * self.s - 1

    def name(self) -> str:
        return f"J^{self.i}_{{{_subset_name(self.I)},{self.s}}}"

    def to_dict(self) -> Dict:
        return {"i": self.i, "I": list(sorted_subset(self.I)), "s": self.s, "dim": self.dim}


def class_E_I(I: Iterable[int], n: int) -> LatticeClass:
    """
    E_I = (s+1) H - (s+1) sum_{i in I} E_i - s sum_{j not in I} E_j, |I^c| = 2s + 3.

    For I = {i}^c (s = -1) the formula returns E_i.

    Args:
        I: Subset of {1..n+3} with odd complement
        n: Even dimension

    Raises:
        ValidationError: If |I^c| is even
    """
    validate_even_dimension(n)
    N = n + 3
    subset = validate_subset(I, N, "I")
    rest = N - len(subset)
    if rest % 2 == 0:
        raise ValidationError(f"E_I needs |I^c| odd, got |I^c|={rest} for I={sorted(subset)}")
    s = (rest - 3) // 2
    space = make_space(n, Side.XSIDE)
    return space.element([s + 1] + [-(s + 1) if j in subset else -s for j in range(1, N + 1)])


def _slice_denominator(x: LatticeClass) -> Fraction:
    y, *rest = x.canonical
    return (x.space.n + 1) * y + sum(rest, Fraction(0))


def radial_project(x: LatticeClass) -> tuple:
    """
    Slice coordinates alpha_i = (y + x_i) / ((n+1) y + sum x_j) - 1/2.

    Raises:
        ValidationError: If x is not an XSide class or lies on (n+1)y + sum x = 0
    """
    if x.space.side != Side.XSIDE:
        raise ValidationError(f"radial_project expects an XSide class, got {x.space}")
    denominator = _slice_denominator(x)
    if denominator == 0:
        raise ValidationError(f"{x} lies on the hyperplane (n+1)y + sum x_i = 0")
    y, *rest = x.canonical
    return tuple((y + xi) / denominator - HALF for xi in rest)


def slice_denominator(x: LatticeClass) -> Fraction:
    """(n+1)y + sum x_i; positive on the effective cone."""
    if x.space.side != Side.XSIDE:
        raise ValidationError(f"Expected an XSide class, got {x.space}")
    return _slice_denominator(x)


def lift_point(alpha: Sequence, n: int) -> LatticeClass:
    """
    The class 1/4 (-K_X) + sum alpha_i eps~_i, whose radial projection is alpha.
    """
    validate_even_dimension(n)
    validate_length(alpha, n + 3, "alpha")
    space = make_space(n, Side.XSIDE)
    coords = (QUARTER,) + to_vector(alpha)
    return space.element(coords, X_EPS_TILDE_BASIS).in_canonical()


def slice_inequality_to_cone(inequality: SliceInequality, n: int, basis: Optional[str] = None) -> IntVector:
    """
    Cone functional f on XSide coordinates with f(x) >= 0 iff the inequality
    holds at radial_project(x), for x with positive slice denominator.

    Args:
        inequality: constant + coeffs . alpha >= 0
        n: Even dimension
        basis: XSide basis of the returned functional (H_E by default)
    """
    validate_even_dimension(n)
    N = n + 3
    validate_length(inequality.coeffs, N, "coeffs")
    space = make_space(n, Side.XSIDE)
    basis = basis or space.canonical_basis
    b = inequality.constant
    a = inequality.coeffs
    shift = b - sum(a, Fraction(0)) / 2
    canonical = (shift * (n + 1) + sum(a, Fraction(0)),) + tuple(shift + ai for ai in a)
    return primitive(mat_vec(transpose(space.basis_matrix(basis)), canonical))


def special_varieties(n: int, dim: Optional[int] = None) -> List[SpecialVariety]:
    """
    All J_{I,s} for the given n, optionally of one dimension.

    Ordered by dimension, then |I|, then I.
    """
    validate_even_dimension(n)
    found = []
    for I in subsets(n + 3):
        if len(I) > n:
            continue
        for s in range((n - len(I)) // 2 + 1):
            J = SpecialVariety(n, I, s)
            if dim is None or J.dim == dim:
                found.append(J)
    found.sort(key=lambda J: (J.dim, J.d, sorted_subset(J.I), J.s))
    return found


def exceptional_trace(i: int, J: SpecialVariety) -> Optional[TraceLocus]:
    """
    E_i intersect J_{I,s} inside E_i = P^(n-1); None when empty.

    The intersection is J^i_{I - i, s} when i is in I, empty when s = 0 and
    i is not in I, and J^i_{I + i, s - 1} otherwise.
    """
    validate_index(i, J.n + 3, "i")
    if i in J.I:
        return TraceLocus(i, J.I - {i}, J.s)
    if J.s == 0:
        return None
    return TraceLocus(i, J.I | {i}, J.s - 1)


def terminal_counts(n: int) -> Dict[str, int]:
    """
    Numbers of m- and (m-1)-dimensional special varieties as binomial sums.

    Their total is the number 2^(n+2) of extremal rays of NE(X_Fano).
    """
    validate_even_dimension(n)
    m = n // 2
    N = n + 3
    top = sum(comb(N, d) for d in range(m + 2) if d % 2 != m % 2)
    below = sum(comb(N, d) for d in range(m + 1) if d % 2 == m % 2)
    logger.debug("Terminal counts for n=%d: %d + %d", n, top, below)
    return {"m_dimensional": top, "m_minus_1_dimensional": below, "total": top + below}
