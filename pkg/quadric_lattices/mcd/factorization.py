"""
The factorization X = X_0 --> X_1 --> ... --> X_{m-1} = X_Fano into steps
that flip all special varieties of one dimension.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Tuple

from quadric_lattices.core.constants import WallKind
from quadric_lattices.core.validators import validate_even_dimension
from quadric_lattices.mcd.arrangement import chamber_of_point
from quadric_lattices.mcd.divisors import SpecialVariety, special_varieties, terminal_counts
from quadric_lattices.mcd.named_cones import DELTA_FANO, DELTA_NEF, named_cones
from quadric_lattices.mcd.walls import classify_wall
from quadric_lattices.planes.labels import PlaneLabel, all_labels
from quadric_lattices.utils.exceptions import ComputationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FlipStep:
    """Step i: flips the strict transforms of all i-dimensional J_{I,s}."""

    step: int
    flipped: Tuple[SpecialVariety, ...]

    def to_dict(self) -> Dict:
        return {"step": self.step, "flipped": [J.to_dict() for J in self.flipped]}


@dataclass(frozen=True)
class FactorizationReport:
    """
    Attributes:
        n: Even dimension
        steps: phi_1 .. phi_{m-1}
        counts: Terminal inventory of special P^m's in X_Fano
    """

    n: int
    steps: Tuple[FlipStep, ...]
    counts: Dict[str, int]

    @property
    def loci_count(self) -> int:
        return sum(len(s.flipped) for s in self.steps)

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "steps": [s.to_dict() for s in self.steps],
            "loci": self.loci_count,
            "counts": dict(self.counts),
        }


def factorization(n: int) -> FactorizationReport:
    """
    Steps phi_1..phi_{m-1}, step i flipping every J_{I,s} of dimension i.

    Empty for n = 2.

    Raises:
        ValidationError: If n is odd (X_Fano is then not Q-factorial)
    """
    validate_even_dimension(n)
    m = n // 2
    steps = tuple(FlipStep(i, tuple(special_varieties(n, dim=i))) for i in range(1, m))
    counts = terminal_counts(n)
    logger.info("Factorization for n=%d: %d steps, %d loci", n, len(steps),
                sum(len(s.flipped) for s in steps))
    return FactorizationReport(n, steps, counts)


def crossed_flips(n: int) -> Dict[int, List[SpecialVariety]]:
    """
    Loci flipped along a path from the interior of Delta_Nef to that of
    Delta_Fano, grouped by dimension: one per separating wall.

    Raises:
        ComputationError: If a separating wall is not a flip
    """
    validate_even_dimension(n)
    polytopes = named_cones(n)
    start = chamber_of_point(polytopes[DELTA_NEF].centroid(), n)
    end = chamber_of_point(polytopes[DELTA_FANO].centroid(), n)
    grouped = defaultdict(list)
    for w in start.separating_walls(end):
        report = classify_wall(w, n)
        if report.kind != WallKind.FLIP:
            raise ComputationError(f"{w.label()} separates Nef(X) from Nef(X_Fano) but is {report.kind.value}")
        grouped[report.locus.dim].append(report.locus)
    return {dim: sorted(loci, key=lambda J: (J.d, sorted(J.I), J.s)) for dim, loci in sorted(grouped.items())}


def fano_planes(n: int) -> List[Tuple[PlaneLabel, SpecialVariety, bool]]:
    """
    The special P^m's of X_Fano, one per plane label I (|I| <= m+1).

    Returns:
        (label, J_{I,s}, is_strict_transform): for |I| not congruent to m the
        P^m is the strict transform of the m-dimensional J_{I,s} with
        s = (m+1-|I|)/2; otherwise it is the locus created by flipping the
        (m-1)-dimensional J_{I,s} with s = (m-|I|)/2
    """
    validate_even_dimension(n)
    m = n // 2
    rows = []
    for label in all_labels(n):
        d = len(label.rep)
        if d % 2 != m % 2:
            rows.append((label, SpecialVariety(n, label.rep, (m + 1 - d) // 2), True))
        else:
            rows.append((label, SpecialVariety(n, label.rep, (m - d) // 2), False))
    return rows
