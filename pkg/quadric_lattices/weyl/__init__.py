"""Weyl group W(D_N) package."""

from quadric_lattices.weyl.element import WeylElement, act, decompose, recompose, sigma
from quadric_lattices.weyl.group import GroupHandle, group_order, orbit, weyl_group_order

__all__ = [
    "GroupHandle",
    "WeylElement",
    "act",
    "decompose",
    "group_order",
    "orbit",
    "recompose",
    "sigma",
    "weyl_group_order",
]
