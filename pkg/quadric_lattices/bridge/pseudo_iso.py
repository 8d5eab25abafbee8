"""
Recovering (M, kappa) from the pullback of a pseudo-isomorphism G --> X.
"""

import logging
from typing import Tuple

from quadric_lattices.bridge.maps import LatticeMap, h_tilde
from quadric_lattices.cones.named import as_weyl_element
from quadric_lattices.core.constants import Side, Z_EPS_BASIS
from quadric_lattices.core.validators import validate_even_dimension
from quadric_lattices.planes.labels import PlaneLabel, canonical
from quadric_lattices.utils.exceptions import ComputationError, NotPseudoIsomorphismError
from quadric_lattices.weyl.element import decompose

logger = logging.getLogger(__name__)


def classify_pseudo_iso(f: LatticeMap, n: int) -> Tuple[PlaneLabel, Tuple[int, ...]]:
    """
    The unique (M, kappa) with f = h~_M o relabel(kappa).

    f o h~_{M_0}^-1 must be an element w of W(D_{n+3}); w = sigma_I o g with
    g in the stabilizer of M_0, and then M = M_I and kappa is the
    permutation part of g.

    Args:
        f: XSide -> ZSide map (H^2(X) -> H^2(G) in G coordinates)
        n: Even dimension

    Returns:
        (canonical label of M, kappa as a 1-based tuple)

    Raises:
        ValidationError: If n is invalid
        NotPseudoIsomorphismError: If f does not send -K_X to -K_G or
            does not carry Eff(X) onto Eff(G)
    """
    validate_even_dimension(n)
    if f.source.side != Side.XSIDE or f.target.side != Side.ZSIDE or f.source.n != n or f.target.n != n:
        raise NotPseudoIsomorphismError(f"Expected a map H^2(X) -> H^2(G) for n={n}, got {f!r}")
    h0 = h_tilde(PlaneLabel(n, frozenset()))
    g = f.compose(h0.inverse())
    matrix = g.matrix_in(Z_EPS_BASIS, Z_EPS_BASIS)
    try:
        w = as_weyl_element(matrix)
    except ComputationError as e:
        raise NotPseudoIsomorphismError(f"{f!r} is not a pseudo-isomorphism pullback: {e}") from e
    I, kappa = decompose(w)
    label = canonical(I, n)
    logger.debug("Classified %r as M=%s, kappa=%s", f, label.name(), kappa)
    return label, kappa
