"""
Exact rational helper functions.

Vectors are tuples of ``Fraction``; matrices are tuples of rows. Heavier
linear algebra (rank, inverse, nullspace) is delegated to sympy.
"""

from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Iterable, Iterator, List, Sequence, Tuple, FrozenSet

import numpy as np
import sympy

from quadric_lattices.utils.exceptions import ValidationError

Vector = Tuple[Fraction, ...]
Matrix = Tuple[Vector, ...]
IntVector = Tuple[int, ...]


def to_fraction(value) -> Fraction:
    """
    Convert an int, Fraction, numeric string or sympy Rational to a Fraction.

    Floats are refused: every computation in this package is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValidationError(f"Coordinate must be rational, got {value!r}")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise ValidationError(f"Coordinate must be rational, got {value!r}")
    if isinstance(value, sympy.Basic) and value.is_Rational:
        return Fraction(int(value.p), int(value.q))
    raise ValidationError(f"Coordinate must be an exact rational, got {type(value).__name__}")


def to_vector(values: Iterable) -> Vector:
    """Convert an iterable of exact numbers to a Fraction tuple."""
    return tuple(to_fraction(v) for v in values)


def rational_pair(value) -> List[int]:
    """[numerator, denominator] of an exact rational."""
    q = to_fraction(value)
    return [q.numerator, q.denominator]


def to_sympy(rows: Sequence[Sequence]) -> sympy.Matrix:
    """Build a sympy Matrix with exact Rational entries."""
    return sympy.Matrix([[sympy.Rational(to_fraction(x).numerator, to_fraction(x).denominator)
                          for x in row] for row in rows])


def from_sympy(matrix: sympy.Matrix) -> Matrix:
    """Convert a sympy Matrix back to a tuple of Fraction rows."""
    return tuple(
        tuple(to_fraction(matrix[i, j]) for j in range(matrix.cols))
        for i in range(matrix.rows)
    )


def object_array(rows) -> np.ndarray:
    """Wrap exact entries in a numpy object array for matrix products."""
    return np.array(rows, dtype=object)


def mat_vec(matrix: Matrix, vector: Sequence[Fraction]) -> Vector:
    """Exact matrix-vector product."""
    product = object_array(matrix).dot(object_array(list(vector)))
    return tuple(Fraction(x) for x in product)


def mat_mul(left: Matrix, right: Matrix) -> Matrix:
    """Exact matrix product."""
    product = object_array(left).dot(object_array(right))
    return tuple(tuple(Fraction(x) for x in row) for row in product)


def transpose(matrix: Sequence[Sequence]) -> Matrix:
    """Transpose a tuple-of-rows matrix."""
    return tuple(tuple(row) for row in zip(*matrix))


def identity(size: int) -> Matrix:
    """Identity matrix over the rationals."""
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(size))
        for i in range(size)
    )


def inverse(matrix: Matrix) -> Matrix:
    """
    Exact inverse of a square rational matrix.

    Raises:
        ValidationError: If the matrix is singular
    """
    m = to_sympy(matrix)
    if m.det() == 0:
        raise ValidationError("Matrix is singular")
    return from_sympy(m.inv())


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank; an empty row list has rank 0."""
    if not rows:
        return 0
    return to_sympy(rows).rank()


def dot(a: Sequence, b: Sequence):
    """Standard coordinate pairing."""
    return sum((x * y for x, y in zip(a, b)), 0)


def primitive(vector: Sequence) -> IntVector:
    """
    Scale a nonzero rational vector to the primitive integer vector on its ray.

    Raises:
        ValidationError: If the vector is zero
    """
    fractions = [to_fraction(x) for x in vector]
    if all(x == 0 for x in fractions):
        raise ValidationError("Zero vector has no primitive representative")
    lcm = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in fractions), 1)
    ints = [int(x * lcm) for x in fractions]
    divisor = reduce(gcd, (abs(x) for x in ints if x != 0))
    return tuple(x // divisor for x in ints)


def primitive_line(vector: Sequence) -> IntVector:
    """Primitive vector up to sign: first nonzero coordinate positive."""
    vec = primitive(vector)
    for x in vec:
        if x != 0:
            return vec if x > 0 else tuple(-y for y in vec)
    return vec


def integer_nullspace(rows: Sequence[Sequence], dim: int) -> List[IntVector]:
    """
    Basis of {x : rows . x = 0} as primitive integer vectors.

    Args:
        rows: Linear forms (may be empty)
        dim: Ambient dimension
    """
    if not rows:
        return [tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)]
    return [primitive(list(v)) for v in to_sympy(rows).nullspace()]


def independent_rows(rows: Sequence[Sequence]) -> List[int]:
    """Indices of a maximal linearly independent subset of rows (first-come order)."""
    if not rows:
        return []
    _, pivots = to_sympy(rows).T.rref()
    return list(pivots)


def subsets(N: int) -> Iterator[FrozenSet[int]]:
    """All subsets of {1..N}, by size then lexicographically."""
    ground = range(1, N + 1)
    for size in range(N + 1):
        for combo in combinations(ground, size):
            yield frozenset(combo)


def sorted_subset(subset: Iterable[int]) -> Tuple[int, ...]:
    """Deterministic tuple form of a subset."""
    return tuple(sorted(subset))
