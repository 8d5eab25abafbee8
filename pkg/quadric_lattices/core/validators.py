"""
Validation functions for lattice and cone inputs.
"""

from typing import Iterable, FrozenSet
from quadric_lattices.utils.exceptions import ValidationError


def validate_integer_positive(value: int, name: str) -> None:
    """
    Validate that an integer value is strictly positive.

    Args:
        value: The value to validate
        name: Parameter name for error messages

    Raises:
        ValidationError: If value is not a positive integer
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{name} must be an integer, got {type(value).__name__}")
    if value <= 0:
        raise ValidationError(f"{name} must be positive, got {value}")


def validate_non_negative(value: int, name: str) -> None:
    """
    Validate that a value is non-negative (>= 0).

    Raises:
        ValidationError: If value is negative
    """
    if value < 0:
        raise ValidationError(f"{name} must be non-negative, got {value}")


def validate_even_dimension(n: int, name: str = "n") -> None:
    """
    Validate that n is an even integer n = 2m >= 2.

    Args:
        n: Dimension of the blown-up projective space
        name: Parameter name for error messages

    Raises:
        ValidationError: If n is odd, non-integral or smaller than 2
    """
    validate_integer_positive(n, name)
    if n % 2 != 0:
        raise ValidationError(f"{name} must be even, got {n}")


def validate_index(i: int, N: int, name: str = "index") -> None:
    """
    Validate that i is an index in {1, ..., N}.

    Raises:
        ValidationError: If i is out of range
    """
    if isinstance(i, bool) or not isinstance(i, int):
        raise ValidationError(f"{name} must be an integer, got {type(i).__name__}")
    if not 1 <= i <= N:
        raise ValidationError(f"{name} must lie in 1..{N}, got {i}")


def validate_subset(indices: Iterable[int], N: int, name: str = "subset") -> FrozenSet[int]:
    """
    Validate that indices form a subset of {1, ..., N}.

    Args:
        indices: Iterable of 1-based indices
        N: Size of the ground set
        name: Parameter name for error messages

    Returns:
        The subset as a frozenset

    Raises:
        ValidationError: If any index is out of range
    """
    subset = frozenset(indices)
    for i in subset:
        validate_index(i, N, f"{name} element")
    return subset


def validate_length(values, expected: int, name: str) -> None:
    """
    Validate that a coordinate vector has the expected length.

    Raises:
        ValidationError: If the length differs
    """
    if len(values) != expected:
        raise ValidationError(f"{name} must have length {expected}, got {len(values)}")
