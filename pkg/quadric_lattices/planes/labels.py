"""
Labels of the 2^(n+2) planes M_I = sigma_I(M_0), their classes and incidences.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List

from quadric_lattices.core.constants import Family, Side
from quadric_lattices.core.validators import validate_even_dimension, validate_index, validate_subset
from quadric_lattices.lattice.lattice_class import LatticeClass
from quadric_lattices.lattice.space import make_space
from quadric_lattices.utils.calculations import sorted_subset, subsets
from quadric_lattices.utils.exceptions import ValidationError


@dataclass(frozen=True)
class PlaneLabel:
    """
    A subset I of {1..n+3} modulo complementation.

    Attributes:
        n: Even dimension
        rep: The representative of {I, I^c} with at most m+1 elements
    """

    n: int
    rep: FrozenSet[int]

    def __post_init__(self):
        validate_even_dimension(self.n)
        rep = validate_subset(self.rep, self.N, "rep")
        if len(rep) > self.m + 1:
            raise ValidationError(
                f"rep must have at most m+1={self.m + 1} elements, got {sorted(rep)}; use canonical()"
            )
        object.__setattr__(self, "rep", rep)

    @property
    def m(self) -> int:
        return self.n // 2

    @property
    def N(self) -> int:
        return self.n + 3

    @property
    def complement(self) -> FrozenSet[int]:
        return frozenset(range(1, self.N + 1)) - self.rep

    @property
    def even_rep(self) -> FrozenSet[int]:
        """The member of {rep, rep^c} of even cardinality."""
        return self.rep if len(self.rep) % 2 == 0 else self.complement

    def flipped(self, I: Iterable[int]) -> "PlaneLabel":
        """Label of sigma_I(M_rep)."""
        return canonical(self.rep ^ frozenset(I), self.n)

    def to_list(self) -> List[int]:
        return list(sorted_subset(self.rep))

    def name(self) -> str:
        return "{" + ",".join(str(i) for i in sorted_subset(self.rep)) + "}"

    def __repr__(self) -> str:
        return f"M_{self.name()}"


def canonical(I: Iterable[int], n: int) -> PlaneLabel:
    """
    Canonical label of I: I itself when |I| <= m+1, otherwise I^c.

    Raises:
        ValidationError: If an index lies outside 1..n+3
    """
    validate_even_dimension(n)
    N = n + 3
    subset = validate_subset(I, N, "I")
    if len(subset) > n // 2 + 1:
        subset = frozenset(range(1, N + 1)) - subset
    return PlaneLabel(n, subset)


def all_labels(n: int) -> List[PlaneLabel]:
    """The 2^(n+2) labels, in deterministic order."""
    validate_even_dimension(n)
    return [PlaneLabel(n, I) for I in subsets(n + 3) if len(I) <= n // 2 + 1]


def plane_class(L: PlaneLabel) -> LatticeClass:
    """Class of M_L in the ZSide lattice."""
    return make_space(L.n, Side.ZSIDE).plane(L.rep)


def intersection_dim(L1: PlaneLabel, L2: PlaneLabel) -> int:
    """
    Dimension of M_{L1} intersect M_{L2}; -1 when they are disjoint.

    Raises:
        ValidationError: If the labels belong to different n
    """
    if L1.n != L2.n:
        raise ValidationError(f"Labels for different n: {L1.n} vs {L2.n}")
    diff = len(L1.rep ^ L2.rep)
    d = min(diff, L1.N - diff)
    return L1.m - d


def family_parity(i: int, L: PlaneLabel) -> Family:
    """
    Component of the image of M_L under the i-th double cover.

    M_0 = M_{} sits in T_psi; M_J lies with it iff the representative J
    avoiding i has even size.
    """
    validate_index(i, L.N, "i")
    J = L.rep if i not in L.rep else L.complement
    return Family.T_PSI if len(J) % 2 == 0 else Family.T_PHI


def planes_in_divisor(L: PlaneLabel) -> List[PlaneLabel]:
    """
    Labels L' whose dual plane (M')* lies in the divisor E_M, M = M_L.

    These are M' = sigma_I(M) with |I| <= m-1 and |I| not congruent to m mod 2.
    """
    found = []
    for I in subsets(L.N):
        if len(I) <= L.m - 1 and len(I) % 2 != L.m % 2:
            found.append(L.flipped(I))
    return sorted(set(found), key=lambda label: (len(label.rep), sorted_subset(label.rep)))
