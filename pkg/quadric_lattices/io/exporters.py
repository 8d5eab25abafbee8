"""
Named export objects: each builds a JSON payload and a flat table.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict

import pandas as pd

from quadric_lattices.bridge.g_cones import G_cones, ray_of
from quadric_lattices.cones.cone import RationalCone
from quadric_lattices.cones.named import E_dual_generators, E_inequalities, cone_E, cone_E_dual
from quadric_lattices.cones.polytope import demihypercube
from quadric_lattices.core.constants import (
    CHAMBER_ENUMERATION_N_CAP,
    CONE_CHECK_N_CAP,
    DEMIHYPERCUBE_N_CAP,
    SCHEMA_VERSION,
)
from quadric_lattices.core.validators import validate_even_dimension
from quadric_lattices.mcd.arrangement import arrangement, enumerate_chambers
from quadric_lattices.mcd.factorization import factorization
from quadric_lattices.mcd.named_cones import named_cones
from quadric_lattices.mcd.walls import classify_all
from quadric_lattices.planes.labels import all_labels, plane_class
from quadric_lattices.utils.calculations import primitive
from quadric_lattices.utils.exceptions import CapExceededError, UnknownObjectError
from quadric_lattices.weyl.group import GroupHandle

logger = logging.getLogger(__name__)


@dataclass
class Export:
    """
    Attributes:
        name: Object name as given on the command line
        n: Even dimension
        payload: JSON body (without the schema envelope)
        table: Flat view used for CSV output
    """

    name: str
    n: int
    payload: Dict[str, Any]
    table: pd.DataFrame

    def to_dict(self) -> Dict[str, Any]:
        return {"schema": SCHEMA_VERSION, "object": self.name, "n": self.n, **self.payload}


def _require(n: int, cap: int, unsafe_cap: bool, what: str) -> None:
    if n > cap and not unsafe_cap:
        raise CapExceededError(f"{what} requested for n={n}, cap is {cap} (use --unsafe-cap to override)")


def _cone_table(cone: RationalCone, ray_names: Dict[tuple, str], facet_names: Dict[tuple, str]) -> pd.DataFrame:
    rows = [{"kind": "ray", "vector": list(r), "name": ray_names.get(r, "")} for r in sorted(cone.rays)]
    rows += [{"kind": "facet", "vector": list(f), "name": facet_names.get(f, "")} for f in sorted(cone.facets)]
    return pd.DataFrame(rows, columns=["kind", "vector", "name"])


def _export_E(n: int, unsafe_cap: bool) -> Export:
    _require(n, CONE_CHECK_N_CAP, unsafe_cap, "The cone E")
    E = cone_E(n)
    ray_names = {ray_of(plane_class(L)): repr(L) for L in all_labels(n)}
    facet_names = {primitive(v): name for name, v in E_inequalities(n)}
    table = _cone_table(E, ray_names, facet_names)
    return Export("cones.E", n, {"cone": E.to_dict(), "ray_count": len(E.rays), "facet_count": len(E.facets)}, table)


def _export_E_dual(n: int, unsafe_cap: bool) -> Export:
    _require(n, CONE_CHECK_N_CAP, unsafe_cap, "The cone E^dual")
    E_dual = cone_E_dual(n)
    ray_names = {primitive(x.convert(E_dual.basis).coords): name for name, x in E_dual_generators(n)}
    table = _cone_table(E_dual, ray_names, {})
    payload = {"cone": E_dual.to_dict(), "ray_count": len(E_dual.rays), "facet_count": len(E_dual.facets)}
    return Export("cones.E_dual", n, payload, table)


def _export_demihypercube(n: int, unsafe_cap: bool) -> Export:
    N = n + 3
    _require(N, DEMIHYPERCUBE_N_CAP, unsafe_cap, "The demihypercube")
    polytope = demihypercube(N)
    payload = {"polytope": polytope.to_dict(), "vertex_count": len(polytope.vertices),
               "facet_count": len(polytope.inequalities)}
    return Export("demihypercube", n, payload, polytope.to_dataframe())


def _export_named_cones(n: int, unsafe_cap: bool) -> Export:
    _require(n, CONE_CHECK_N_CAP, unsafe_cap, "The named cones")
    cones = named_cones(n)
    frames = []
    for name in cones.names:
        frame = cones[name].to_dataframe()
        frame.insert(0, "polytope", name)
        frames.append(frame)
    return Export("named_cones", n, cones.to_dict(), pd.concat(frames, ignore_index=True))


def _export_arrangement(n: int, unsafe_cap: bool) -> Export:
    walls = [w.to_dict() for w in arrangement(n)]
    return Export("arrangement", n, {"count": len(walls), "walls": walls}, pd.DataFrame(walls))


def _export_walls(n: int, unsafe_cap: bool) -> Export:
    _require(n, CONE_CHECK_N_CAP, unsafe_cap, "Wall classification")
    reports = [r.to_dict() for r in classify_all(n)]
    table = pd.DataFrame([{k: v for k, v in r.items() if k != "loci"} for r in reports])
    return Export("walls", n, {"count": len(reports), "walls": reports}, table)


def _export_chambers(n: int, unsafe_cap: bool) -> Export:
    _require(n, CHAMBER_ENUMERATION_N_CAP, unsafe_cap, "Chamber enumeration")
    chambers = [c.to_dict() for c in enumerate_chambers(n, cap=n if unsafe_cap else CHAMBER_ENUMERATION_N_CAP)]
    payload = {"count": len(chambers), "movable": sum(c["movable"] for c in chambers), "chambers": chambers}
    return Export("chambers", n, payload, pd.DataFrame(chambers))


def _export_factorization(n: int, unsafe_cap: bool) -> Export:
    report = factorization(n)
    rows = [dict(J.to_dict(), step=step.step, name=J.name()) for step in report.steps for J in step.flipped]
    table = pd.DataFrame(rows, columns=["step", "name", "I", "s", "dim"])
    return Export("factorization", n, report.to_dict(), table)


def _export_weyl_generators(n: int, unsafe_cap: bool) -> Export:
    N = n + 3
    W_prime = GroupHandle.sign_changes(N)
    full = GroupHandle.full(N)
    elements = [w.to_dict() for w in W_prime.sorted_elements()]
    payload = {
        "W(D_N)": {"N": N, "generators": [g.to_dict() for g in full.generators]},
        "W'": {"generators": [g.to_dict() for g in W_prime.generators], "order": len(elements),
               "elements": elements},
    }
    return Export("weyl.generators", n, payload, pd.DataFrame(elements))


def _export_G_cones(n: int, unsafe_cap: bool) -> Export:
    _require(n, CONE_CHECK_N_CAP, unsafe_cap, "The cones of G")
    cones = G_cones(n)
    rows = [
        {"cone": name, "ray": entry["ray"], "name": entry["name"]}
        for name, inventory in cones.inventories.items()
        for entry in inventory
    ]
    payload = dict(cones.to_dict(), ray_counts=cones.ray_counts())
    return Export("G_cones", n, payload, pd.DataFrame(rows, columns=["cone", "ray", "name"]))


EXPORTS: Dict[str, Callable[[int, bool], Export]] = {
    "cones.E": _export_E,
    "cones.E_dual": _export_E_dual,
    "demihypercube": _export_demihypercube,
    "named_cones": _export_named_cones,
    "arrangement": _export_arrangement,
    "walls": _export_walls,
    "chambers": _export_chambers,
    "factorization": _export_factorization,
    "weyl.generators": _export_weyl_generators,
    "G_cones": _export_G_cones,
}


def export_object(name: str, n: int, unsafe_cap: bool = False) -> Export:
    """
    Build one named object for n.

    Raises:
        UnknownObjectError: If name is not one of EXPORTS
        ValidationError: If n is not an even integer >= 2
        CapExceededError: If n is above the object's cap and unsafe_cap is off
    """
    if name not in EXPORTS:
        raise UnknownObjectError(f"Unknown export object '{name}'. Must be one of {', '.join(EXPORTS)}.")
    validate_even_dimension(n)
    logger.info("Exporting %s for n=%d", name, n)
    return EXPORTS[name](n, unsafe_cap)
