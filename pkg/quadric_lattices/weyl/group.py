"""
Finitely generated subgroups of W(D_N): orbits, orders and element listings.
"""

import logging
from collections import deque
from functools import cached_property
from math import factorial
from typing import FrozenSet, Iterable, List, Optional, Sequence, Set

from sympy.combinatorics import Permutation, PermutationGroup

from quadric_lattices.core.constants import ELEMENT_LISTING_LIMIT, GROUP_ENUMERATION_N_CAP
from quadric_lattices.lattice.lattice_class import LatticeClass
from quadric_lattices.utils.exceptions import CapExceededError, ValidationError
from quadric_lattices.weyl.element import WeylElement, act, sigma

logger = logging.getLogger(__name__)


class GroupHandle:
    """
    A subgroup of W(D_N) given by generators.

    The order is computed once (Schreier-Sims on the action on +-eps_i) and
    cached. A handle may also carry a precomputed element set, e.g. the
    result of a symmetry search.
    """

    def __init__(
        self,
        N: int,
        generators: Sequence[WeylElement],
        name: str = "",
        elements: Optional[Iterable[WeylElement]] = None,
    ):
        for g in generators:
            if g.N != N:
                raise ValidationError(f"Generator {g} does not act on N={N}")
        self.N = N
        self.generators = tuple(generators)
        self.name = name or f"<{len(self.generators)} generators>"
        self._elements: Optional[FrozenSet[WeylElement]] = (
            frozenset(elements) if elements is not None else None
        )

    @classmethod
    def full(cls, N: int) -> "GroupHandle":
        """W(D_N): adjacent transpositions and sigma_{1,2}."""
        gens = [WeylElement.transposition(i, i + 1, N) for i in range(1, N)]
        gens.append(sigma({1, 2}, N))
        return cls(N, gens, name=f"W(D_{N})")

    @classmethod
    def sign_changes(cls, N: int) -> "GroupHandle":
        """W' = {sigma_I}: generated by sigma_{i,i+1}."""
        return cls(N, [sigma({i, i + 1}, N) for i in range(1, N)], name="W'")

    @classmethod
    def trivial(cls, N: int) -> "GroupHandle":
        return cls(N, [], name="trivial")

    @cached_property
    def permutation_group(self) -> PermutationGroup:
        perms = [g.to_permutation() for g in self.generators]
        if not perms:
            perms = [Permutation(2 * self.N - 1)]
        return PermutationGroup(perms)

    @property
    def order(self) -> int:
        return group_order(self)

    def elements(self, limit: int = ELEMENT_LISTING_LIMIT) -> FrozenSet[WeylElement]:
        """
        All group elements by breadth-first closure.

        Raises:
            CapExceededError: If the group has more than limit elements
        """
        if self._elements is not None:
            return self._elements
        if self.order > limit:
            raise CapExceededError(
                f"{self.name} has {self.order} elements, above the listing limit {limit}"
            )
        identity = WeylElement.identity(self.N)
        seen: Set[WeylElement] = {identity}
        queue = deque([identity])
        while queue:
            current = queue.popleft()
            for g in self.generators:
                nxt = g.compose(current)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        self._elements = frozenset(seen)
        logger.debug("Enumerated %d elements of %s", len(seen), self.name)
        return self._elements

    def sorted_elements(self, limit: int = ELEMENT_LISTING_LIMIT) -> List[WeylElement]:
        """Elements in a deterministic order (flip set, then permutation)."""
        return sorted(self.elements(limit), key=lambda w: (len(w.flips), w.flips, w.perm))

    def contains(self, w: WeylElement) -> bool:
        if self._elements is not None:
            return w in self._elements
        return self.permutation_group.contains(w.to_permutation())

    def __repr__(self) -> str:
        return f"GroupHandle({self.name}, N={self.N})"


def weyl_group_order(N: int) -> int:
    """|W(D_N)| = 2^(N-1) N!."""
    return 2 ** (N - 1) * factorial(N)


def group_order(gens: GroupHandle, cap: int = GROUP_ENUMERATION_N_CAP) -> int:
    """
    Exact order of the generated group.

    Args:
        gens: Group handle
        cap: Largest N accepted

    Raises:
        CapExceededError: If N exceeds cap
    """
    if gens.N > cap:
        raise CapExceededError(f"Group order requested for N={gens.N}, cap is N <= {cap}")
    if gens._elements is not None:
        return len(gens._elements)
    order = int(gens.permutation_group.order())
    if weyl_group_order(gens.N) % order != 0:
        raise ValidationError(f"Order {order} does not divide |W(D_{gens.N})|")
    return order


def orbit(gens: GroupHandle, x: LatticeClass) -> Set[LatticeClass]:
    """
    Orbit of x under the generated group, deduplicated by exact coordinates.
    """
    seen: Set[LatticeClass] = {x}
    queue = deque([x])
    while queue:
        current = queue.popleft()
        for g in gens.generators:
            image = act(g, current)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    logger.debug("Orbit of size %d under %s", len(seen), gens.name)
    return seen
