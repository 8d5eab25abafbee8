"""
Custom exceptions for the quadric lattices package.
"""


class QuadricLatticeError(Exception):
    """Base exception for all quadric lattice errors."""
    pass


class ValidationError(QuadricLatticeError):
    """Raised when input validation fails."""
    pass


class ConfigurationError(QuadricLatticeError):
    """Raised when configuration loading or parsing fails."""
    pass


class ComputationError(QuadricLatticeError):
    """Raised when an exact computation cannot produce the requested object."""
    pass


class CapExceededError(ComputationError):
    """Raised when an enumeration would exceed its configured size cap."""
    pass


class NotEffectiveError(ComputationError):
    """Raised when a divisor class lies outside the effective cone."""
    pass


class NotPseudoIsomorphismError(ComputationError):
    """Raised when a lattice map is not the pullback of a pseudo-isomorphism."""
    pass


class UnknownObjectError(ValidationError):
    """Raised when an export object name is not recognised."""
    pass
