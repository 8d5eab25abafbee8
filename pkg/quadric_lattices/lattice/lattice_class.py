"""
Exact lattice classes: coordinate vectors in a named basis of a LatticeSpace.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Dict, Tuple

from quadric_lattices.core.validators import validate_length
from quadric_lattices.utils.calculations import mat_vec, to_fraction, to_vector
from quadric_lattices.utils.exceptions import ValidationError

if TYPE_CHECKING:
    from quadric_lattices.lattice.space import LatticeSpace


@dataclass(frozen=True, eq=False)
class LatticeClass:
    """
    A class in one of the two rank-(n+4) lattices.

    Two classes are equal when they represent the same abstract vector,
    whatever basis their coordinates are written in.

    Attributes:
        space: Ambient lattice space
        coords: Exact rational coordinates (length n+4)
        basis: Name of the basis the coordinates refer to
    """

    space: "LatticeSpace"
    coords: Tuple[Fraction, ...]
    basis: str

    def __post_init__(self):
        object.__setattr__(self, "coords", to_vector(self.coords))
        validate_length(self.coords, self.space.rank, "coords")
        if self.basis not in self.space.basis_names:
            raise ValidationError(
                f"Unknown basis '{self.basis}' for {self.space}; "
                f"registered: {', '.join(self.space.basis_names)}"
            )

    @property
    def canonical(self) -> Tuple[Fraction, ...]:
        """Coordinates in the orthogonal basis of the space."""
        if self.basis == self.space.canonical_basis:
            return self.coords
        return mat_vec(self.space.basis_matrix(self.basis), self.coords)

    def convert(self, target_basis: str) -> "LatticeClass":
        """Same class written in another registered basis."""
        if target_basis == self.basis:
            return self
        coords = mat_vec(self.space.basis_inverse(target_basis), self.canonical)
        return LatticeClass(self.space, coords, target_basis)

    def in_canonical(self) -> "LatticeClass":
        return self.convert(self.space.canonical_basis)

    def pair(self, other: "LatticeClass") -> Fraction:
        return self.space.pair(self, other)

    def _coerce(self, other: "LatticeClass") -> Tuple[Fraction, ...]:
        if not isinstance(other, LatticeClass):
            raise ValidationError(f"Cannot combine LatticeClass with {type(other).__name__}")
        self.space.check_same(other.space)
        return other.convert(self.basis).coords

    def __add__(self, other: "LatticeClass") -> "LatticeClass":
        coords = self._coerce(other)
        return LatticeClass(self.space, tuple(a + b for a, b in zip(self.coords, coords)), self.basis)

    def __sub__(self, other: "LatticeClass") -> "LatticeClass":
        coords = self._coerce(other)
        return LatticeClass(self.space, tuple(a - b for a, b in zip(self.coords, coords)), self.basis)

    def __neg__(self) -> "LatticeClass":
        return LatticeClass(self.space, tuple(-a for a in self.coords), self.basis)

    def __mul__(self, scalar) -> "LatticeClass":
        factor = to_fraction(scalar)
        return LatticeClass(self.space, tuple(factor * a for a in self.coords), self.basis)

    __rmul__ = __mul__

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, LatticeClass):
            return NotImplemented
        return self.space == other.space and self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash((self.space.n, self.space.side, self.canonical))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def to_dict(self) -> Dict[str, Any]:
        """Serialize as {space: {n, side}, basis, coords: [[num, den], ...]}."""
        return {
            "space": {"n": self.space.n, "side": self.space.side.value},
            "basis": self.basis,
            "coords": [[c.numerator, c.denominator] for c in self.coords],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "LatticeClass":
        from quadric_lattices.core.constants import Side
        from quadric_lattices.lattice.space import make_space

        space_info = data["space"]
        space = make_space(int(space_info["n"]), Side.from_string(space_info["side"]))
        coords = tuple(Fraction(int(num), int(den)) for num, den in data["coords"])
        return cls(space, coords, data["basis"])

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coords)
        return f"LatticeClass(n={self.space.n}, side={self.space.side.value}, {self.basis}: [{body}])"
