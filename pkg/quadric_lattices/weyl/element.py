"""
Signed permutations with an even number of sign changes: the Weyl group W(D_N).

An element w acts on the orthogonal basis by w(eps_i) = signs[i] * eps_{perm[i]}
and fixes eta.
"""

from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, Sequence, Tuple

from sympy.combinatorics import Permutation

from quadric_lattices.core.constants import Side
from quadric_lattices.core.validators import validate_integer_positive, validate_subset
from quadric_lattices.lattice.lattice_class import LatticeClass
from quadric_lattices.utils.exceptions import ValidationError


@dataclass(frozen=True)
class WeylElement:
    """
    Element of W(D_N) as a signed permutation.

    Attributes:
        N: Number of eps vectors
        perm: perm[i-1] is the image index of i (1-based)
        signs: signs[i-1] in {+1, -1}, an even number of -1 entries
    """

    N: int
    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    def __post_init__(self):
        validate_integer_positive(self.N, "N")
        object.__setattr__(self, "perm", tuple(int(p) for p in self.perm))
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if sorted(self.perm) != list(range(1, self.N + 1)):
            raise ValidationError(f"perm must be a permutation of 1..{self.N}, got {self.perm}")
        if len(self.signs) != self.N or any(s not in (1, -1) for s in self.signs):
            raise ValidationError(f"signs must be {self.N} entries in {{+1, -1}}, got {self.signs}")
        if self.signs.count(-1) % 2 != 0:
            raise ValidationError(f"W(D_N) needs an even number of sign changes, got {self.signs}")

    @classmethod
    def identity(cls, N: int) -> "WeylElement":
        return cls(N, tuple(range(1, N + 1)), (1,) * N)

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> "WeylElement":
        """Pure permutation (the stabilizer G_0 of M_0 consists of these)."""
        return cls(len(perm), tuple(perm), (1,) * len(perm))

    @classmethod
    def transposition(cls, i: int, j: int, N: int) -> "WeylElement":
        perm = list(range(1, N + 1))
        perm[i - 1], perm[j - 1] = j, i
        return cls.permutation(perm)

    @property
    def flips(self) -> Tuple[int, ...]:
        """Indices i with w(eps_i) = -eps_{perm(i)}."""
        return tuple(i + 1 for i, s in enumerate(self.signs) if s == -1)

    def is_identity(self) -> bool:
        return self == WeylElement.identity(self.N)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self o other (apply other first)."""
        if other.N != self.N:
            raise ValidationError(f"Size mismatch: {self.N} vs {other.N}")
        perm = tuple(self.perm[p - 1] for p in other.perm)
        signs = tuple(s * self.signs[p - 1] for s, p in zip(other.signs, other.perm))
        return WeylElement(self.N, perm, signs)

    __mul__ = compose

    def inverse(self) -> "WeylElement":
        perm = [0] * self.N
        signs = [1] * self.N
        for i, (p, s) in enumerate(zip(self.perm, self.signs), start=1):
            perm[p - 1] = i
            signs[p - 1] = s
        return WeylElement(self.N, tuple(perm), tuple(signs))

    def apply_coords(self, coords: Sequence) -> Tuple:
        """Act on canonical (eta, eps_1..eps_N) coordinates."""
        image = [coords[0]] + [0] * self.N
        for i in range(self.N):
            image[self.perm[i]] = self.signs[i] * coords[i + 1]
        return tuple(image)

    def matrix(self) -> Tuple[Tuple[int, ...], ...]:
        """Integer matrix on the (eta, eps) basis; columns are images of basis vectors."""
        size = self.N + 1
        rows = [[0] * size for _ in range(size)]
        rows[0][0] = 1
        for i in range(self.N):
            rows[self.perm[i]][i + 1] = self.signs[i]
        return tuple(tuple(row) for row in rows)

    def to_permutation(self) -> Permutation:
        """Permutation of the 2N points +eps_i (i-1) and -eps_i (N+i-1)."""
        image = [0] * (2 * self.N)
        for i in range(self.N):
            target = self.perm[i] - 1
            if self.signs[i] == 1:
                image[i], image[i + self.N] = target, target + self.N
            else:
                image[i], image[i + self.N] = target + self.N, target
        return Permutation(image)

    def to_dict(self) -> Dict[str, Any]:
        return {"perm": list(self.perm), "flips": list(self.flips)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "WeylElement":
        perm = tuple(data["perm"])
        flips = set(data.get("flips", ()))
        return cls(len(perm), perm, tuple(-1 if i in flips else 1 for i in range(1, len(perm) + 1)))

    def __repr__(self) -> str:
        return f"WeylElement(perm={list(self.perm)}, flips={list(self.flips)})"


def sigma(I: Iterable[int], N: int) -> WeylElement:
    """
    The sign change sigma_I; for odd |I| this is sigma_{I^c}.

    Args:
        I: Subset of {1..N}
        N: Number of eps vectors

    Returns:
        Pure sign-change element with an even flip set
    """
    subset = validate_subset(I, N, "I")
    if len(subset) % 2 == 1:
        subset = frozenset(range(1, N + 1)) - subset
    return WeylElement(N, tuple(range(1, N + 1)), tuple(-1 if i in subset else 1 for i in range(1, N + 1)))


def decompose(w: WeylElement) -> Tuple[FrozenSet[int], Tuple[int, ...]]:
    """
    Split w = sigma(I) o g with g in the stabilizer G_0 of M_0.

    G_0 is the group of pure permutations, so g is the permutation part of w
    and I collects the images of the negated indices.

    Returns:
        (I, perm) with |I| even and perm the permutation induced on the M_i
    """
    I = frozenset(w.perm[i] for i in range(w.N) if w.signs[i] == -1)
    return I, w.perm


def recompose(I: Iterable[int], perm: Sequence[int]) -> WeylElement:
    """Inverse of decompose."""
    return sigma(I, len(perm)).compose(WeylElement.permutation(perm))


def act(w: WeylElement, x: LatticeClass) -> LatticeClass:
    """
    Apply w to a ZSide class; eta is fixed.

    Raises:
        ValidationError: If x is not a ZSide class with N = w.N
    """
    space = x.space
    if space.side != Side.ZSIDE:
        raise ValidationError(f"Weyl elements act on ZSide classes, got {space}")
    if space.N != w.N:
        raise ValidationError(f"Size mismatch: element has N={w.N}, space has N={space.N}")
    image = space.element(w.apply_coords(x.canonical))
    return image.convert(x.basis)
