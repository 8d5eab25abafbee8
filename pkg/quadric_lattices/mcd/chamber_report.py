"""
Chamber queries for a divisor class: where it sits among the named
polytopes, the walls through it and the nearest walls.
"""

import logging
from typing import Dict, List

from quadric_lattices.core.constants import Side
from quadric_lattices.lattice.lattice_class import LatticeClass
from quadric_lattices.mcd.arrangement import chamber_of
from quadric_lattices.mcd.named_cones import DELTA, DELTA_FANO, DELTA_MOV, DELTA_NEF, named_cones
from quadric_lattices.mcd.walls import classify_wall, nearest_walls
from quadric_lattices.utils.calculations import rational_pair
from quadric_lattices.utils.exceptions import ValidationError

logger = logging.getLogger(__name__)

FANO_CHAMBER = "Fano chamber"
DELTA_VERTEX = "vertex of Delta"


def region_labels(alpha, n: int) -> List[str]:
    """Names of the regions containing a slice point, most specific first."""
    polytopes = named_cones(n)
    labels = []
    if tuple(alpha) in set(polytopes[DELTA].vertices):
        labels.append(DELTA_VERTEX)
    if polytopes[DELTA_FANO].is_interior(alpha):
        labels.append(FANO_CHAMBER)
    for name in (DELTA_FANO, DELTA_NEF, DELTA_MOV, DELTA):
        if polytopes[name].is_interior(alpha):
            labels.append(f"interior of {name}")
        elif polytopes[name].contains(alpha):
            labels.append(f"boundary of {name}")
    return labels


def chamber_report(x: LatticeClass, nearest: int = 3) -> Dict:
    """
    Chamber signs, region membership, walls through the class and the
    nearest walls with their classification.

    Raises:
        ValidationError: If x is not an XSide class
        NotEffectiveError: If x is not effective
    """
    if x.space.side != Side.XSIDE:
        raise ValidationError(f"Chamber queries take XSide classes, got {x.space}")
    n = x.space.n
    chamber = chamber_of(x)
    alpha = chamber.sample_point
    signs = chamber.signs
    through = chamber.walls_through()
    logger.info("Chamber query for %r", x)
    return {
        "n": n,
        "class": x.to_dict(),
        "alpha": [rational_pair(a) for a in alpha],
        "regions": region_labels(alpha, n),
        "chamber": chamber.to_dict()["signs"],
        "sign_counts": {"+": signs.count(1), "0": signs.count(0), "-": signs.count(-1)},
        "full_dimensional": chamber.is_full_dimensional,
        "walls_through": [classify_wall(w, n).to_dict() for w in through],
        # walls through the class are listed once, above
        "nearest_walls": [
            dict(classify_wall(w, n).to_dict(), distance_squared=rational_pair(d))
            for w, d in nearest_walls(alpha, n, nearest, exclude=through)
        ],
    }
