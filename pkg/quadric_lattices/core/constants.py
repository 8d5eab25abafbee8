"""
Constants and enumerations for quadric lattice computations.
"""

from enum import Enum


class _NamedEnum(Enum):
    """Enum whose members are looked up by their string value."""

    @classmethod
    def from_string(cls, value: str):
        """Create member from string value (case-insensitive)."""
        value_lower = value.lower()
        for member in cls:
            if member.value.lower() == value_lower:
                return member
        choices = ", ".join(f"'{member.value}'" for member in cls)
        raise ValueError(f"Invalid {cls.__name__}: {value}. Must be one of {choices}.")


class Side(_NamedEnum):
    """Which of the two quadratic lattices a class lives in."""
    ZSIDE = "Z"
    XSIDE = "X"


class Suite(_NamedEnum):
    """Verification suite selector."""
    LATTICE = "lattice"
    CONES = "cones"
    MCD = "mcd"
    BRIDGE = "bridge"
    ALL = "all"


class OutputFormat(_NamedEnum):
    """Report and export output format."""
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class Family(_NamedEnum):
    """Connected component of the image of a plane under a double cover."""
    T_PHI = "T_phi"
    T_PSI = "T_psi"


class WallSide(_NamedEnum):
    """Half-space of an arrangement hyperplane H_I = k."""
    BELOW = "below"
    ABOVE = "above"


class WallKind(_NamedEnum):
    """Type of the contraction met when crossing a wall."""
    FIBER_TYPE = "fiber_type"
    DIVISORIAL = "divisorial"
    FLIP = "flip"


class CurveKind(_NamedEnum):
    """Named curve classes on G."""
    LINE = "line"
    ANTICANONICAL = "d"
    EXCEPTIONAL_LINE = "e"
    PHI_FIBER = "phi_fiber"
    PSI_FIBER = "psi_fiber"
    ELLIPTIC = "elliptic"


class Command(_NamedEnum):
    """CLI subcommands."""
    VERIFY = "verify"
    CHAMBER = "chamber"
    EXPORT = "export"


# Registered basis names
Z_EPS_BASIS = "eta_eps"
Z_PLANES_BASIS = "eta_planes"
X_STANDARD_BASIS = "H_E"
X_ANTICANONICAL_BASIS = "antiK_E"
X_EPS_TILDE_BASIS = "antiK_epstilde"

# Enumeration caps (overridable with --unsafe-cap)
EXHAUSTIVE_N_CAP = 8
SYMMETRY_N_CAP = 2
GROUP_ENUMERATION_N_CAP = 10
CHAMBER_ENUMERATION_N_CAP = 2
CONE_CHECK_N_CAP = 4
DEMIHYPERCUBE_N_CAP = 9
PSEUDO_ISO_SAMPLES = 1_000
ELEMENT_LISTING_LIMIT = 200_000

DEFAULT_SAMPLES = 10_000
DEFAULT_SEED = 0

SCHEMA_VERSION = 1
WORKERS_ENV_VAR = "QUADRIC_LATTICES_WORKERS"
