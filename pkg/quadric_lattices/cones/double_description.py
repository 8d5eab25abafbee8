"""
Incremental double description over the integers.

Given inequalities A x >= 0, computes the extreme rays and a lineality basis
of the cone they cut out. Rays are kept as primitive integer vectors, and the
set of inequalities each ray satisfies with equality is a bitmask, so
adjacency of two rays is decided combinatorially: p and q are adjacent iff no
third ray vanishes on every inequality common to p and q.
"""

import logging
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from quadric_lattices.utils.calculations import (
    IntVector,
    dot,
    independent_rows,
    integer_nullspace,
    inverse,
    primitive,
    rank,
)

logger = logging.getLogger(__name__)


def extreme_rays(
    inequalities: Sequence[Sequence[int]], dim: int
) -> Tuple[List[IntVector], List[IntVector]]:
    """
    Extreme rays and lineality of {x in Q^dim : a . x >= 0 for all a}.

    Args:
        inequalities: Integer (or rational) linear forms
        dim: Ambient dimension

    Returns:
        (rays, lineality): sorted primitive rays of the pointed part, and a
        primitive basis of the largest linear subspace in the cone
    """
    rows = [list(primitive(a)) for a in inequalities if any(x != 0 for x in a)]
    lineality = integer_nullspace(rows, dim)
    if not rows:
        return [], lineality

    basis_idx = independent_rows(rows)
    r = len(basis_idx)
    if r == dim:
        rays = _pointed_rays(rows, r, basis_idx)
    else:
        # cone = lineality + (cone restricted to the row space)
        B = [rows[i] for i in basis_idx]
        reduced = [[dot(a, b) for b in B] for a in rows]
        reduced_rays = _pointed_rays(reduced, r, basis_idx)
        rays = [
            primitive([sum(c[j] * B[j][t] for j in range(r)) for t in range(dim)])
            for c in reduced_rays
        ]
    return sorted(set(rays)), lineality


def _pointed_rays(rows: List[List[int]], r: int, initial: List[int]) -> List[IntVector]:
    """Double description for a system of full column rank r."""
    start = [rows[i] for i in initial]
    # columns of the inverse of r independent rows span a simplicial cone
    start_inverse = inverse(tuple(tuple(row) for row in start))
    rays: List[IntVector] = []
    masks: List[int] = []
    initial_bits = [1 << i for i in initial]
    for j in range(r):
        rays.append(primitive([start_inverse[t][j] for t in range(r)]))
        masks.append(sum(bit for k, bit in enumerate(initial_bits) if k != j))

    chosen = set(initial)
    remaining = [k for k in range(len(rows)) if k not in chosen]
    for step, k in enumerate(remaining, start=1):
        a = rows[k]
        values = [dot(a, ray) for ray in rays]
        positive = [i for i, v in enumerate(values) if v > 0]
        negative = [i for i, v in enumerate(values) if v < 0]
        zero = [i for i, v in enumerate(values) if v == 0]
        bit = 1 << k

        # rays on the nonnegative side survive
        new_rays: List[IntVector] = [rays[i] for i in positive] + [rays[i] for i in zero]
        new_masks: List[int] = [masks[i] for i in positive] + [masks[i] | bit for i in zero]

        # adjacent +/- pairs give a new ray on the hyperplane a . x = 0
        if positive and negative:
            row_rays = _rays_by_row(masks)
            everything = (1 << len(rays)) - 1
            for p in positive:
                for q in negative:
                    common = masks[p] & masks[q]
                    # too few shared zeros to span a 2-face
                    if common.bit_count() < r - 2:
                        continue
                    if not _adjacent(p, q, common, row_rays, everything):
                        continue
                    vp, vq = values[p], values[q]
                    combined = [vp * y - vq * x for x, y in zip(rays[p], rays[q])]
                    new_rays.append(primitive(combined))
                    new_masks.append(common | bit)

        rays, masks = new_rays, new_masks
        logger.debug("Double description step %d/%d: %d rays", step, len(remaining), len(rays))
        if not rays:
            break
    return rays


def _rays_by_row(masks: List[int]) -> Dict[int, int]:
    """For every inequality bit, the bitmask of rays vanishing on it."""
    table: Dict[int, int] = {}
    for idx, zero_set in enumerate(masks):
        ray_bit = 1 << idx
        z = zero_set
        while z:
            low = z & -z
            b = low.bit_length() - 1
            table[b] = table.get(b, 0) | ray_bit
            z ^= low
    return table


def _adjacent(p: int, q: int, common: int, row_rays: Dict[int, int], everything: int) -> bool:
    pair = (1 << p) | (1 << q)
    candidates = everything
    z = common
    while z:
        low = z & -z
        candidates &= row_rays.get(low.bit_length() - 1, 0)
        if candidates == pair:
            return True
        z ^= low
    return candidates == pair


def brute_force_facets(rays: Sequence[Sequence[int]], dim: int) -> List[IntVector]:
    """
    Facet normals of a full-dimensional cone by exhaustive search.

    Every (dim-1)-subset of generators of rank dim-1 spans a candidate
    hyperplane; it is a facet iff all generators lie weakly on one side.
    Exponential in the number of rays; used as an oracle.
    """
    gens = [list(primitive(v)) for v in rays]
    facets = set()
    for subset in combinations(gens, dim - 1):
        if rank(list(subset)) != dim - 1:
            continue
        normal = integer_nullspace(list(subset), dim)[0]
        values = [dot(normal, g) for g in gens]
        if all(v >= 0 for v in values):
            facets.add(tuple(normal))
        elif all(v <= 0 for v in values):
            facets.add(tuple(-x for x in normal))
    return sorted(facets)
