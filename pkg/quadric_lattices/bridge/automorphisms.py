"""
Bounds W' <= Aut(G) <= W(D_{n+3}) checked on the lattice.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List

from quadric_lattices.cones.named import cone_E, cone_E_dual
from quadric_lattices.core.constants import Side
from quadric_lattices.core.validators import validate_even_dimension
from quadric_lattices.lattice.space import make_space
from quadric_lattices.utils.calculations import mat_vec, primitive
from quadric_lattices.weyl.element import WeylElement
from quadric_lattices.weyl.group import GroupHandle, weyl_group_order

logger = logging.getLogger(__name__)

GENERAL_POSITION_NOTE = (
    "Aut(G) = W' holds for general points; special configurations are not "
    "visible to the lattice and are not decided here."
)


@dataclass
class AutBounds:
    """
    Attributes:
        n: Even dimension
        lower: |W'| = 2^(n+2)
        upper: |W(D_{n+3})| = 2^(n+2) (n+3)!
        checked: Number of elements of W' checked
        failures: sigma_I that failed to preserve -K_G, Nef(G) or Eff(G)
    """

    n: int
    lower: int
    upper: int
    checked: int
    failures: List[Dict] = field(default_factory=list)
    note: str = GENERAL_POSITION_NOTE

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "lower": self.lower,
            "upper": self.upper,
            "checked": self.checked,
            "passed": self.passed,
            "failures": list(self.failures),
            "note": self.note,
        }


def preserves_G_structure(w: WeylElement, n: int) -> Dict[str, bool]:
    """Whether w fixes -K_G and permutes the rays of Eff(G) and of Nef(G)."""
    eta = make_space(n, Side.ZSIDE).eta().canonical
    matrix = w.matrix()
    result = {"anticanonical": tuple(mat_vec(matrix, eta)) == tuple(eta)}
    for name, cone in (("Eff", cone_E(n)), ("Nef", cone_E_dual(n))):
        rays = set(cone.rays)
        images = {primitive(mat_vec(matrix, r)) for r in rays}
        result[name] = images == rays
    return result


def aut_bounds(n: int) -> AutBounds:
    """
    Check every sigma_I on the lattice and report the group-order bounds.

    Raises:
        ValidationError: If n is not an even integer >= 2
    """
    validate_even_dimension(n)
    N = n + 3
    group = GroupHandle.sign_changes(N)
    elements = group.sorted_elements()
    failures = []
    for w in elements:
        verdict = preserves_G_structure(w, n)
        if not all(verdict.values()):
            failures.append({"element": w.to_dict(), **verdict})
    report = AutBounds(n=n, lower=2 ** (n + 2), upper=weyl_group_order(N), checked=len(elements), failures=failures)
    logger.info("Aut(G) bounds for n=%d: %d <= |Aut| <= %d, %d failures",
                n, report.lower, report.upper, len(failures))
    return report
