"""
Verification suites: exact checks of the identities, counts and cone
relations for one even n, grouped by package.

Checks that enumerate labels run exhaustively; checks over pairs or tuples
run exhaustively at n = 2 and on seeded random samples above. Heavy cone
constructions are skipped above their caps unless unsafe_cap is set.
"""

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import Callable, Dict, FrozenSet, List, Sequence, Tuple

import numpy as np

from quadric_lattices.bridge.automorphisms import aut_bounds
from quadric_lattices.bridge.classes import (
    alpha_inv,
    anticanonical_G,
    beta_class,
    class_H_M,
    curve_class,
    fiber_contraction_divisor,
)
from quadric_lattices.bridge.g_cones import (
    EFF,
    MOV1,
    MOV1_DUAL,
    NE,
    NEF,
    G_cones,
    contraction_face,
    face_labels,
    simplicial_facets,
)
from quadric_lattices.bridge.maps import (
    LatticeMap,
    conjugate_to_Z,
    cremona_pullback,
    h_tilde,
    relabel,
    weyl_map,
)
from quadric_lattices.bridge.pseudo_iso import classify_pseudo_iso
from quadric_lattices.cones.cone import cone_from_facets, cone_from_rays, dual, face_of
from quadric_lattices.cones.double_description import brute_force_facets
from quadric_lattices.cones.named import (
    E_dual_generators,
    E_inequalities,
    cone_E,
    cone_E_dual,
    delta,
    eta_M,
    linear_symmetries,
)
from quadric_lattices.cones.polytope import H_inequality, demihypercube, demihypercube_inequalities, eval_H, vertex
from quadric_lattices.core.constants import (
    CHAMBER_ENUMERATION_N_CAP,
    CONE_CHECK_N_CAP,
    CurveKind,
    DEMIHYPERCUBE_N_CAP,
    EXHAUSTIVE_N_CAP,
    Family,
    GROUP_ENUMERATION_N_CAP,
    PSEUDO_ISO_SAMPLES,
    Side,
    Suite,
    SYMMETRY_N_CAP,
    WallKind,
    WORKERS_ENV_VAR,
    X_ANTICANONICAL_BASIS,
    X_STANDARD_BASIS,
    Z_EPS_BASIS,
    Z_PLANES_BASIS,
)
from quadric_lattices.core.validators import validate_even_dimension
from quadric_lattices.lattice.space import make_space
from quadric_lattices.mcd.arrangement import WallDescriptor, arrangement, chamber_of, enumerate_chambers
from quadric_lattices.mcd.chamber_report import DELTA_VERTEX, FANO_CHAMBER, region_labels
from quadric_lattices.mcd.divisors import (
    SpecialVariety,
    TraceLocus,
    class_E_I,
    exceptional_trace,
    lift_point,
    radial_project,
    terminal_counts,
)
from quadric_lattices.mcd.factorization import crossed_flips, factorization
from quadric_lattices.mcd.named_cones import (
    DELTA,
    DELTA_FANO,
    DELTA_MOV,
    DELTA_NEF,
    box_faces,
    fano_anticanonical_inequalities,
    named_cones,
)
from quadric_lattices.mcd.walls import classify_all, classify_wall
from quadric_lattices.planes.labels import (
    PlaneLabel,
    all_labels,
    canonical,
    family_parity,
    intersection_dim,
    plane_class,
    planes_in_divisor,
)
from quadric_lattices.utils.calculations import identity, primitive, rank, subsets
from quadric_lattices.utils.exceptions import CapExceededError, NotPseudoIsomorphismError
from quadric_lattices.verification.report import Check, CheckRecorder, Report
from quadric_lattices.weyl.element import WeylElement, act, decompose, recompose, sigma
from quadric_lattices.weyl.group import GroupHandle, group_order, orbit, weyl_group_order

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)

SuiteResult = Tuple[List[Check], List[str]]


# ----------------------------------------------------------------------
# sampling


class Sampler:
    """Seeded draws of subsets, labels and group elements for one n."""

    def __init__(self, n: int, samples: int, seed: int):
        self.n = n
        self.N = n + 3
        self.samples = samples
        self.exhaustive = n <= 2
        self.rng = np.random.default_rng(seed)

    def subset(self, avoid: Sequence[int] = ()) -> FrozenSet[int]:
        bits = self.rng.integers(0, 2, size=self.N)
        return frozenset(i + 1 for i in range(self.N) if bits[i] and i + 1 not in avoid)

    def distinct(self, count: int) -> Tuple[int, ...]:
        return tuple(sorted(int(i) + 1 for i in self.rng.choice(self.N, size=count, replace=False)))

    def label(self) -> PlaneLabel:
        return canonical(self.subset(), self.n)

    def permutation(self) -> Tuple[int, ...]:
        return tuple(int(p) + 1 for p in self.rng.permutation(self.N))

    def element(self) -> WeylElement:
        flips = [int(b) for b in self.rng.integers(0, 2, size=self.N)]
        if sum(flips) % 2:
            flips[-1] ^= 1
        return WeylElement(self.N, self.permutation(), tuple(-1 if f else 1 for f in flips))

    def draw(self, everything: Callable[[], List], one: Callable[[], object], limit: int = None) -> List:
        """Every item at n = 2, otherwise `limit` (default: samples) random ones."""
        if self.exhaustive:
            return everything()
        return [one() for _ in range(limit or self.samples)]


def _mismatches(items, predicate) -> int:
    return sum(1 for item in items if not predicate(item))


def _allowed(n: int, cap: int, unsafe_cap: bool) -> bool:
    return unsafe_cap or n <= cap


# ----------------------------------------------------------------------
# lattice, weyl and planes


def lattice_suite(n: int, samples: int, seed: int, unsafe_cap: bool = False) -> SuiteResult:
    rec = CheckRecorder("lattice")
    skipped: List[str] = []
    draw = Sampler(n, samples, seed)
    Z = make_space(n, Side.ZSIDE)
    X = make_space(n, Side.XSIDE)
    N, m, t = n + 3, n // 2, (-1) ** (n // 2)
    labels = all_labels(n)
    eta = Z.eta()
    size = N + 1

    rec.record("gram.Z", "eta^2 = 4, eps_i^2 = (-1)^m, orthogonal",
               [[4 if i == j == 0 else (t if i == j else 0) for j in range(size)] for i in range(size)],
               lambda: [list(row) for row in Z.gram(Z_EPS_BASIS)])
    rec.record("gram.X", "(H,H) = n-1, (E_i,E_i) = -1, orthogonal",
               [[n - 1 if i == j == 0 else (-1 if i == j else 0) for j in range(size)] for i in range(size)],
               lambda: [list(row) for row in X.gram(X_STANDARD_BASIS)])
    rec.record("anticanonical.square", "(-K_X)^2 = 4(n-1)", 4 * (n - 1),
               lambda: X.anticanonical().pair(X.anticanonical()))
    rec.record("anticanonical.coords", "-K_X is the first vector of the (-K_X, E) basis",
               [1] + [0] * N, lambda: list(X.anticanonical().convert(X_ANTICANONICAL_BASIS).coords))

    def round_trip_failures():
        failures = 0
        for space in (Z, X):
            for source in space.basis_names:
                for _ in range(min(draw.samples, 50)):
                    coords = [Fraction(int(a), int(b)) for a, b in zip(
                        draw.rng.integers(-9, 10, size=size), draw.rng.integers(1, 6, size=size))]
                    x = space.element(coords, source)
                    for target in space.basis_names:
                        if x.convert(target).convert(source).coords != x.coords:
                            failures += 1
        return failures

    rec.record("convert.round_trip", "conversion to any basis and back is the identity", 0, round_trip_failures)

    def pairing_failures():
        pairs = draw.draw(lambda: [(a, b) for a in labels for b in labels], lambda: (draw.label(), draw.label()))
        failures = 0
        for a, b in pairs:
            x, y = plane_class(a), plane_class(b) + eta * 3
            value = x.pair(y)
            if value != y.pair(x) or value != x.convert(Z_PLANES_BASIS).pair(y):
                failures += 1
        return failures

    rec.record("pair.symmetric", "pairing is symmetric and basis independent", 0, pairing_failures)
    rec.record("eta.M", "eta . M = 1 for every plane", len(labels),
               lambda: sum(1 for L in labels if eta.pair(plane_class(L)) == 1))
    rec.record("M.square", "M^2 = (1 + (-1)^m (2m+3))/4 for every plane", [Fraction(1 + t * (2 * m + 3), 4)],
               lambda: sorted({plane_class(L).pair(plane_class(L)) for L in labels}))

    def eta_identity_items():
        everything = lambda: [(I, i, j) for I in subsets(N) for i, j in combinations(range(1, N + 1), 2)
                              if i not in I and j not in I]

        def one():
            i, j = draw.distinct(2)
            return draw.subset(avoid=(i, j)), i, j

        return draw.draw(everything, one)

    rec.record("eta.identity", "M_I + M_{I+i} + M_{I+j} + M_{I+ij} = eta", 0, lambda: _mismatches(
        eta_identity_items(),
        lambda item: Z.plane(item[0]) + Z.plane(item[0] | {item[1]}) + Z.plane(item[0] | {item[2]})
        + Z.plane(item[0] | {item[1], item[2]}) == eta,
    ))
    rec.record("plane.act", "M_I = sigma_I(M_0) for every label", 0, lambda: _mismatches(
        labels, lambda L: act(sigma(L.rep, N), Z.plane(())) == plane_class(L)))
    rec.record("eps.planes", "eps_i = M_0 + M_i - eta/2", 0, lambda: _mismatches(
        range(1, N + 1), lambda i: Z.eps(i) == Z.plane(()) + Z.plane({i}) - eta * HALF))

    def parity_items():
        return draw.draw(
            lambda: [(i, I) for i in range(1, N + 1) for I in subsets(N) if i not in I],
            lambda: (lambda i: (i, draw.subset(avoid=(i,))))(draw.distinct(1)[0]),
        )

    def parity_ok(item):
        i, I = item
        same = len(I) % 2 == m % 2
        plus = (eta * HALF + Z.eps(i)).pair(Z.plane(I))
        minus = (eta * HALF - Z.eps(i)).pair(Z.plane(I))
        return plus == int(same) and minus == int(not same)

    rec.record("parity.table", "(eta/2 +- eps_i) . M_I in {0, 1} by the parity of |I|", 0,
               lambda: _mismatches(parity_items(), parity_ok))

    def delta_items():
        def one():
            I = draw.subset()
            if len(I) % 2 == 0:
                I = I ^ {1}
            return draw.label(), I

        return draw.draw(lambda: [(L, I) for L in labels for I in subsets(N) if len(I) % 2 == 1], one)

    rec.record("delta.sigma", "delta_M . sigma_I(M) = (|I|-1)/2 for |I| odd", 0, lambda: _mismatches(
        delta_items(), lambda item: delta(item[0]).pair(Z.plane(item[0].rep ^ item[1])) == Fraction(len(item[1]) - 1, 2)))

    def eta_M_items():
        return draw.draw(lambda: [(L, pair) for L in labels for pair in combinations(range(1, N + 1), 2)],
                         lambda: (draw.label(), draw.distinct(2)))

    rec.record("eta_M.sigma_ij", "eta_M . sigma_ij(M) = 0", 0, lambda: _mismatches(
        eta_M_items(), lambda item: eta_M(item[0]).pair(Z.plane(item[0].rep ^ set(item[1]))) == 0))

    rec.record("integral.examples", "eta, M_{1,2}, eps_1 + eps_2 integral; eta/2 not",
               [True, False, True, True],
               lambda: [Z.is_integral(eta), Z.is_integral(eta * HALF), Z.is_integral(Z.plane({1, 2})),
                        Z.is_integral(Z.eps(1) + Z.eps(2))])
    rec.record("integral.planes", "every plane class is integral", len(labels),
               lambda: sum(1 for L in labels if Z.is_integral(plane_class(L))))
    rec.record("unimodular", "the plane lattice is unimodular", 1, lambda: abs(Z.lattice_determinant()))

    # weyl
    if _allowed(N, GROUP_ENUMERATION_N_CAP, unsafe_cap):
        rec.record("weyl.order", "|W(D_N)| = 2^(N-1) N!", 2 ** (N - 1) * factorial(N),
                   lambda: group_order(GroupHandle.full(N), cap=max(N, GROUP_ENUMERATION_N_CAP)))
        rec.record("weyl.sign_changes", "|W'| = 2^(n+2)", 2 ** (n + 2),
                   lambda: group_order(GroupHandle.sign_changes(N), cap=max(N, GROUP_ENUMERATION_N_CAP)))
    else:
        skipped.append("lattice.weyl.order")
    W_prime = GroupHandle.sign_changes(N)
    rec.record("weyl.orbits", "W'-orbits of M_0, eta and M_0 + M_1", [2 ** (n + 2), 1, 2],
               lambda: [len(orbit(W_prime, Z.plane(()))), len(orbit(W_prime, eta)),
                        len(orbit(W_prime, Z.plane(()) + Z.plane({1})))])

    def isometry_failures():
        failures = 0
        for _ in range(min(draw.samples, 500)):
            w = draw.element()
            x, y = plane_class(draw.label()), plane_class(draw.label()) + Z.eps(draw.distinct(1)[0])
            if act(w, x).pair(act(w, y)) != x.pair(y):
                failures += 1
        return failures

    rec.record("weyl.isometry", "W(D_N) preserves the pairing", 0, isometry_failures)
    rec.record("weyl.decompose", "recompose(decompose(w)) = w", 0, lambda: _mismatches(
        [draw.element() for _ in range(min(draw.samples, 500))], lambda w: recompose(*decompose(w)) == w))
    rec.record("weyl.sigma.homomorphism", "sigma_I o sigma_J = sigma_{I xor J}", 0, lambda: _mismatches(
        [(draw.subset(), draw.subset()) for _ in range(min(draw.samples, 500))],
        lambda p: sigma(p[0], N).compose(sigma(p[1], N)) == sigma(p[0] ^ p[1], N)))

    # planes
    rec.record("planes.injective", "plane classes are pairwise distinct", len(labels),
               lambda: len({plane_class(L) for L in labels}))
    rec.record("planes.adjacent", "dim(M cap sigma_i(M)) = m-1", 0, lambda: _mismatches(
        [(L, i) for L in labels for i in range(1, N + 1)],
        lambda p: intersection_dim(p[0], p[0].flipped({p[1]})) == m - 1))
    def family_sizes():
        sizes = set()
        for i in range(1, N + 1):
            phi = sum(family_parity(i, L) == Family.T_PHI for L in labels)
            sizes.add((phi, len(labels) - phi))
        return [list(s) for s in sorted(sizes)]

    rec.record("planes.families", "half of the planes in each family, for every i",
               [[2 ** (n + 1), 2 ** (n + 1)]], family_sizes)
    rec.record("planes.in_divisor", "planes (M')* inside E_M",
               sum(comb(N, d) for d in range(m) if d % 2 != m % 2),
               lambda: len(planes_in_divisor(PlaneLabel(n, frozenset()))))
    return rec.checks, skipped


# ----------------------------------------------------------------------
# cones


def _random_cone_trials(draw: Sampler, trials: int) -> int:
    """Disagreements between double description and the brute-force oracle."""
    failures = 0
    for _ in range(trials):
        dim = int(draw.rng.integers(3, 7))
        count = int(draw.rng.integers(dim, 9))
        rays = []
        for _ in range(count):
            tail = [int(x) for x in draw.rng.integers(-3, 4, size=dim - 1)]
            rays.append([int(draw.rng.integers(1, 4))] + tail)
        if rank(rays) < dim:
            continue
        if set(cone_from_rays(rays).facets) != set(brute_force_facets(rays, dim)):
            failures += 1
    return failures


def cones_suite(n: int, samples: int, seed: int, unsafe_cap: bool = False) -> SuiteResult:
    rec = CheckRecorder("cones")
    skipped: List[str] = []
    draw = Sampler(n, samples, seed)
    Z = make_space(n, Side.ZSIDE)
    N = n + 3

    if _allowed(N, DEMIHYPERCUBE_N_CAP, unsafe_cap):
        rec.record("demihypercube.counts", "2^(N-1) vertices and 2^(N-1) + 2N facets",
                   [2 ** (N - 1), 2 ** (N - 1) + 2 * N],
                   lambda: [len(demihypercube(N).vertices), len(demihypercube(N).inequalities)])
        rec.record("demihypercube.facets", "facets are the box and the H_I >= 1, |I| even", True,
                   lambda: demihypercube(N).matches(demihypercube_inequalities(N)))
        rec.record("demihypercube.simplices", "every H_I = 1 facet holds N vertices", True,
                   lambda: all(len(demihypercube(N).vertices_on(H_inequality(I, 1, N))) == N
                               for I in subsets(N) if len(I) % 2 == 0))
    else:
        skipped.append("cones.demihypercube")

    rec.record("double_description.oracle", "incremental double description agrees with brute force", 0,
               lambda: _random_cone_trials(draw, min(samples, 25)))

    if not _allowed(n, CONE_CHECK_N_CAP, unsafe_cap):
        skipped.append("cones.E")
        return rec.checks, skipped

    E, E_dual = cone_E(n), cone_E_dual(n)
    rec.record("E.counts", "E has 2^(n+2) rays and 2^(n+2) + 2(n+3) facets",
               [2 ** (n + 2), 2 ** (n + 2) + 2 * N], lambda: [len(E.rays), len(E.facets)])
    rec.record("E.inequalities", "the listed inequalities are exactly the facets of E", True,
               lambda: set(E.facets) == {primitive(v) for _, v in E_inequalities(n)})
    rec.record("E.from_facets", "the inequalities of E generate the plane classes", True,
               lambda: cone_from_facets([v for _, v in E_inequalities(n)], Z, Z_EPS_BASIS) == E)
    rec.record("E_dual.counts", "E^dual has 2^(n+2) + 2(n+3) rays and 2^(n+2) facets",
               [2 ** (n + 2) + 2 * N, 2 ** (n + 2)], lambda: [len(E_dual.rays), len(E_dual.facets)])
    rec.record("E_dual.generators", "E^dual rays are eta/2 +- eps_i and delta_M", True,
               lambda: set(E_dual.rays) == {primitive(x.convert(Z_EPS_BASIS).coords)
                                            for _, x in E_dual_generators(n)})
    rec.record("E_dual.inside_E", "E^dual is contained in E", True,
               lambda: all(E.contains(r) for r in E_dual.rays))
    rec.record("E.bidual", "dual(dual(E)) = E", True, lambda: dual(dual(E)) == E)
    rec.record("E.membership", "eta/2 + eps_1 in E, eta in E^dual", [True, True],
               lambda: [E.contains(Z.eta() * HALF + Z.eps(1)), E_dual.contains(Z.eta())])
    rec.record("E.face.delta", "delta_{M_0} cuts out the simplicial cone on M_1..M_N",
               {primitive(Z.plane({i}).coords) for i in range(1, N + 1)},
               lambda: set(face_of(E, delta(PlaneLabel(n, frozenset()))).rays))
    m = n // 2
    rec.record("E.face.parity", "M_0 + M_1 cuts out the planes with 1 not in I, |I| not congruent to m",
               {primitive(Z.plane(I).coords) for I in subsets(N) if 1 not in I and len(I) % 2 != m % 2},
               lambda: set(face_of(E, Z.plane(()) + Z.plane({1})).rays))

    if _allowed(n, SYMMETRY_N_CAP, unsafe_cap):
        def symmetry_check():
            group = linear_symmetries(E, Z.eta(), cap=max(n, SYMMETRY_N_CAP))
            full = GroupHandle.full(N).elements()
            return [len(group.elements()), group.elements() == full]

        rec.record("E.symmetries", "linear symmetries of (E, eta) form W(D_N)",
                   [weyl_group_order(N), True], symmetry_check)
    else:
        skipped.append("cones.E.symmetries")
    return rec.checks, skipped


# ----------------------------------------------------------------------
# mcd


def _flip_loci_count(n: int) -> int:
    m = n // 2
    return sum(comb(n + 3, d) for d in range(n + 1) for s in range((n - d) // 2 + 1) if 1 <= d + 2 * s - 1 <= m - 1)


def mcd_suite(n: int, samples: int, seed: int, unsafe_cap: bool = False) -> SuiteResult:
    rec = CheckRecorder("mcd")
    skipped: List[str] = []
    draw = Sampler(n, samples, seed)
    X = make_space(n, Side.XSIDE)
    N, m = n + 3, n // 2
    full = frozenset(range(1, N + 1))

    # divisor classes and the radial projection
    rec.record("E_I.empty", "E_{} = (m+1) H - m sum E_j", [m + 1] + [-m] * N,
               lambda: list(class_E_I((), n).canonical))
    rec.record("E_I.all_but_one", "E_{{i}^c} = E_i", 0, lambda: _mismatches(
        range(1, N + 1), lambda i: class_E_I(full - {i}, n) == X.E(i)))
    rec.record("E_I.projection", "E_I projects to the vertex v_{I^c}", 0, lambda: _mismatches(
        [I for I in subsets(N) if (N - len(I)) % 2 == 1],
        lambda I: radial_project(class_E_I(I, n)) == vertex(full - I, N)))
    rec.record("projection.examples", "-K_X to the origin, H to alpha_i = 1/(n+1) - 1/2",
               [[0] * N, [Fraction(1, n + 1) - HALF] * N],
               lambda: [list(radial_project(X.anticanonical())), list(radial_project(X.H()))])
    rec.record("H_I.distance", "H_J(v_K) = |J xor K|", 0, lambda: _mismatches(
        draw.draw(lambda: [(J, K) for J in subsets(N) for K in subsets(N)], lambda: (draw.subset(), draw.subset()),
                  limit=min(samples, 2000)),
        lambda p: eval_H(p[0], vertex(p[1], N)) == len(p[0] ^ p[1])))
    rec.record("arrangement.size", "m 2^(n+2) hyperplanes H_I = k", m * 2 ** (n + 2), lambda: len(arrangement(n)))

    counts = terminal_counts(n)
    rec.record("terminal.total", "special P^m's of X_Fano number 2^(n+2)", 2 ** (n + 2), lambda: counts["total"])
    if n == 4:
        rec.record("terminal.n4", "42 surfaces and planes from J of dim 2, 22 from flipped curves", [42, 22],
                   lambda: [counts["m_dimensional"], counts["m_minus_1_dimensional"]])
    rec.record("factorization.loci", "loci flipped by the factorization", _flip_loci_count(n),
               lambda: factorization(n).loci_count)
    if n == 4:
        rec.record("factorization.n4", "21 lines J_{ij,0} and one curve J_{,1}", [21, 1],
                   lambda: [sum(J.s == 0 for J in factorization(4).steps[0].flipped),
                            sum(J.s == 1 for J in factorization(4).steps[0].flipped)])
    rec.record("trace.cases", "E_i meets J_{I,s} in J^i_{I-i,s}, nothing, or J^i_{I+i,s-1}",
               [TraceLocus(1, frozenset({2}), 0), None, TraceLocus(1, frozenset({1}), 0)],
               lambda: [exceptional_trace(1, SpecialVariety(n, frozenset({1, 2}), 0)),
                        exceptional_trace(3, SpecialVariety(n, frozenset({1, 2}), 0)),
                        exceptional_trace(1, SpecialVariety(n, frozenset(), 1))])

    def fano_form():
        expected = []
        for I in subsets(N):
            if len(I) % 2 == m % 2:
                row = [2] + [len(I) - m - 2 if i in I else len(I) - m for i in range(1, N + 1)]
                expected.append(primitive(row))
        return [f for _, f in fano_anticanonical_inequalities(n)] == expected

    rec.record("fano.anticanonical", "Nef(X_Fano) facets on (-K_X, E) coordinates", True, fano_form)

    if not _allowed(n, CONE_CHECK_N_CAP, unsafe_cap):
        skipped.append("mcd.named_cones")
        return rec.checks, skipped

    # the nested polytopes
    polytopes = named_cones(n)
    rec.record("Delta.facets", "Delta has 2^(n+2) + 2(n+3) facets", 2 ** (n + 2) + 2 * N,
               lambda: len(polytopes[DELTA].inequalities))
    rec.record("nesting", "Delta_Nef, Delta_Fano in Delta_Mov in Delta", [True, True, True],
               lambda: [polytopes[DELTA_NEF].is_subset_of(polytopes[DELTA_MOV]),
                        polytopes[DELTA_FANO].is_subset_of(polytopes[DELTA_MOV]),
                        polytopes[DELTA_MOV].is_subset_of(polytopes[DELTA])])
    origin = tuple(Fraction(0) for _ in range(N))
    rec.record("fano.origin", "the origin is interior to Delta_Fano", True,
               lambda: polytopes[DELTA_FANO].is_interior(origin))
    if n == 2:
        rec.record("surface.equalities", "Delta_Fano = Delta_Nef = Delta_Mov for n = 2", [True, True],
                   lambda: [polytopes[DELTA_FANO].vertices == polytopes[DELTA_NEF].vertices,
                            polytopes[DELTA_NEF].vertices == polytopes[DELTA_MOV].vertices])
    if n >= 4:
        rec.record("Mov.box_facets", "the faces alpha_i = +-1/2 of Delta are facets of Delta_Mov", True,
                   lambda: all(q.homogenized() in polytopes[DELTA_MOV].facet_set for q, _ in box_faces(n)))
    else:
        # on the surface the box faces only touch Delta_Mov
        rec.record("Mov.box_vertices", "each face alpha_i = +-1/2 meets Delta_Mov in one vertex", [1] * (2 * N),
                   lambda: [len(on_face) for _, on_face in box_faces(n)])
    rec.record("Mov.avoids_H1", "Delta_Mov misses the facets H_I = 1 of Delta", True,
               lambda: all(eval_H(I, v) > 1 for I in subsets(N) if len(I) % 2 == 0
                           for v in polytopes[DELTA_MOV].vertices))
    rec.record("chamber.anticanonical", "-K_X lies in the Fano chamber, on the positive side of every wall",
               [True, len(arrangement(n))],
               lambda: [FANO_CHAMBER in region_labels(radial_project(X.anticanonical()), n),
                        chamber_of(X.anticanonical()).signs.count(1)])
    rec.record("chamber.E1", "E_1 is a vertex of Delta", True,
               lambda: DELTA_VERTEX in region_labels(radial_project(X.E(1)), n))
    rec.record("chamber.H", "H lies in Delta_Nef", True, lambda: polytopes[DELTA_NEF].contains(radial_project(X.H())))

    # wall crossings
    reports = classify_all(n)
    rec.record("walls.kinds", "fiber type, divisorial and flip walls",
               {WallKind.FIBER_TYPE.value: 2 * N, WallKind.DIVISORIAL.value: 2 ** (N - 1),
                WallKind.FLIP.value: (m - 1) * 2 ** (N - 1)},
               lambda: {kind.value: sum(r.kind == kind for r in reports) for kind in WallKind})
    rec.record("walls.divisorial", "the divisor contracted across H_I = 2 projects to v_I", 0, lambda: _mismatches(
        [r for r in reports if r.kind == WallKind.DIVISORIAL],
        lambda r: radial_project(r.exceptional) == vertex(r.wall.I, N)))
    rec.record("walls.example.divisorial", "H_{1} = 2 contracts E_1", True,
               lambda: classify_wall(WallDescriptor(n, frozenset({1}), 2), n).exceptional == X.E(1))
    rec.record("walls.example.fiber", "alpha_1 = -1/2 is a P^1-bundle with lines through p_1", True,
               lambda: "line through p_1" in classify_wall(WallDescriptor.coordinate_wall(1, n, upper=False), n).fiber)
    if n >= 4:
        rec.record("walls.example.flip", "H_{} = 3 flips the curve J_{,1} into a P^(n-2)",
                   [[1, n - 2], SpecialVariety(n, frozenset(), 1)],
                   lambda: (lambda r: [list(r.flipped_dims), r.locus])(
                       classify_wall(WallDescriptor(n, frozenset(), 3), n)))

    def crossed_matches():
        steps = {s.step: sorted((sorted(J.I), J.s) for J in s.flipped) for s in factorization(n).steps}
        crossed = {dim: sorted((sorted(J.I), J.s) for J in loci) for dim, loci in crossed_flips(n).items()}
        return crossed == steps

    rec.record("factorization.walls", "walls between Nef(X) and Nef(X_Fano) flip the factorization loci",
               True, crossed_matches)

    if _allowed(n, CHAMBER_ENUMERATION_N_CAP, unsafe_cap):
        def chamber_summary():
            chambers = enumerate_chambers(n, cap=max(n, CHAMBER_ENUMERATION_N_CAP))
            distinct = len({c.descriptor.signs for c in chambers}) == len(chambers)
            return [distinct, sum(c.in_movable for c in chambers) >= 1]

        rec.record("chambers.enumeration", "chambers have distinct sign vectors and meet Delta_Mov",
                   [True, True], chamber_summary)
        if n == 2:
            rec.record("chambers.surface", "exactly one chamber lies in Delta_Mov for n = 2", 1,
                       lambda: sum(c.in_movable for c in enumerate_chambers(2)))
    else:
        skipped.append("mcd.chambers")
    return rec.checks, skipped


# ----------------------------------------------------------------------
# bridge


def bridge_suite(n: int, samples: int, seed: int, unsafe_cap: bool = False) -> SuiteResult:
    rec = CheckRecorder("bridge")
    skipped: List[str] = []
    draw = Sampler(n, samples, seed)
    Z = make_space(n, Side.ZSIDE)
    X = make_space(n, Side.XSIDE)
    N, m = n + 3, n // 2
    labels = all_labels(n)
    L0 = PlaneLabel(n, frozenset())
    h0 = h_tilde(L0)
    minus_K = anticanonical_G(n)

    pairs = draw.draw(lambda: [(a, b) for a in labels for b in labels], lambda: (draw.label(), draw.label()))
    rec.record("duality", "E_M . l_M' = M . M'", 0, lambda: _mismatches(
        pairs, lambda p: beta_class(p[0]).dot(alpha_inv(p[1])) == plane_class(p[0]).pair(plane_class(p[1]))))
    rec.record("anticanonical.lines", "-K_G . l_M = 1", len(labels),
               lambda: sum(1 for L in labels if minus_K.dot(alpha_inv(L)) == 1))
    if n == 4:
        rec.record("E_M.adjacent_lines", "E_M . l_{sigma_i(M)} = -1 for n = 4", 0, lambda: _mismatches(
            [(L, i) for L in labels for i in range(1, N + 1)],
            lambda p: beta_class(p[0]).dot(alpha_inv(p[0].flipped({p[1]}))) == -1))
    rec.record("beta.equivariant", "beta o sigma_I = sigma_I o beta", 0, lambda: _mismatches(
        draw.draw(lambda: [(L, I) for L in labels for I in subsets(N)], lambda: (draw.label(), draw.subset()),
                  limit=min(samples, 2000)),
        lambda p: act(sigma(p[1], N), beta_class(p[0]).vector) == beta_class(p[0].flipped(p[1])).vector))

    # the map h~ from H^2(X) to the plane lattice
    rec.record("h_tilde.E_I", "h~_{M_0}(E_I) = M_I", 0, lambda: _mismatches(
        [I for I in subsets(N) if len(I) % 2 == 0], lambda I: h0(class_E_I(I, n)) == Z.plane(I)))
    rec.record("h_tilde.eps", "h~_{M_0}(eps~_i) = eps_i", 0, lambda: _mismatches(
        range(1, N + 1), lambda i: h0(X.eps_tilde(i)) == Z.eps(i)))
    rec.record("h_tilde.equivariant", "h~_{sigma_I(M)} = sigma_I o h~_M", 0, lambda: _mismatches(
        draw.draw(lambda: [(L, I) for L in labels for I in subsets(N)], lambda: (draw.label(), draw.subset()),
                  limit=min(samples, 200)),
        lambda p: h_tilde(p[0].flipped(p[1])) == weyl_map(sigma(p[1], N), n).compose(h_tilde(p[0]))))

    def isometry_failures():
        basis = [X.E(i) - X.E(i + 1) for i in range(1, N)] + [X.H() - X.E(1) * (n + 1)]
        scale = (-1) ** (m - 1)
        return sum(1 for x in basis for y in basis if h0(x).pair(h0(y)) != scale * x.pair(y))

    rec.record("h_tilde.isometry", "h~ scales the form on (-K_X)^perp by (-1)^(m-1)", 0, isometry_failures)

    rec.record("H_M.d_M", "H_M . d_M = 1", 0, lambda: _mismatches(
        labels, lambda L: class_H_M(L).dot(curve_class(CurveKind.ANTICANONICAL, L)) == 1))
    rec.record("H_M.pullback", "H_M = h~_M(H)", 0, lambda: _mismatches(
        draw.draw(lambda: labels, draw.label, limit=min(samples, 256)),
        lambda L: h_tilde(L)(X.H()) == class_H_M(L).vector))
    rec.record("H_M.equivariant", "H_{sigma_I(M)} = sigma_I(H_M)", 0, lambda: _mismatches(
        draw.draw(lambda: [(L, I) for L in labels for I in subsets(N)], lambda: (draw.label(), draw.subset()),
                  limit=min(samples, 2000)),
        lambda p: class_H_M(p[0].flipped(p[1])).vector == act(sigma(p[1], N), class_H_M(p[0]).vector)))
    if n == 2:
        rec.record("H_M.surface", "H_M = -K_G - E_M for n = 2", 0, lambda: _mismatches(
            labels, lambda L: class_H_M(L).vector == minus_K.vector - plane_class(L)))

    def curve_pairings():
        failures = 0
        c = curve_class(CurveKind.ELLIPTIC, n=n)
        for L in labels:
            d = curve_class(CurveKind.ANTICANONICAL, L)
            e = curve_class(CurveKind.EXCEPTIONAL_LINE, L)
            E_M = beta_class(L)
            failures += minus_K.dot(d) != n + 1
            failures += any(beta_class(L.flipped({i})).dot(d) != 0 for i in range(1, N + 1))
            failures += E_M.dot(e) != -1
            failures += any(beta_class(L.flipped(pair)).dot(e) != 0 for pair in combinations(range(1, N + 1), 2))
            failures += E_M.dot(c) != 1
        failures += minus_K.dot(c) != 4
        return failures

    rec.record("curves.pairings", "-K.d = n+1, E_{sigma_i M}.d = 0, E_M.e = -1, E_{sigma_ij M}.e = 0, "
               "-K.c = 4, E_M.c = 1", 0, curve_pairings)
    rec.record("curves.fibers", "fiber classes are contracted by their Nef rays", 0, lambda: _mismatches(
        [(family, i) for family in Family for i in range(1, N + 1)],
        lambda p: fiber_contraction_divisor(p[0], p[1], n).dot(
            curve_class(CurveKind.PHI_FIBER if p[0] == Family.T_PHI else CurveKind.PSI_FIBER, i=p[1], n=n)) == 0))

    # pseudo-isomorphisms and Cremona maps
    def round_trip_failures():
        failures = 0
        for _ in range(min(samples, PSEUDO_ISO_SAMPLES)):
            I, kappa = draw.subset(), draw.permutation()
            f = weyl_map(sigma(I, N), n).compose(h0).compose(relabel(kappa, n))
            if classify_pseudo_iso(f, n) != (canonical(I, n), kappa):
                failures += 1
        return failures

    identity_perm = tuple(range(1, N + 1))
    swap = (2, 1) + identity_perm[2:]
    rec.record("pseudo_iso.examples", "h~_{M_0}, h~_{M_0} o relabel(1 2), sigma_12 o h~_{M_0}",
               [(L0, identity_perm), (L0, swap), (canonical({1, 2}, n), identity_perm)],
               lambda: [classify_pseudo_iso(h0, n),
                        classify_pseudo_iso(h0.compose(relabel(swap, n)), n),
                        classify_pseudo_iso(weyl_map(sigma({1, 2}, N), n).compose(h0), n)])
    rec.record("pseudo_iso.round_trip", "classify(sigma_I o h~_{M_0} o relabel(kappa)) = (M_I, kappa)", 0,
               round_trip_failures)

    def rejects_scaling():
        doubled = LatticeMap(X, X, tuple(tuple(2 * x for x in row) for row in identity(X.rank)),
                             X_STANDARD_BASIS, X_STANDARD_BASIS, "2")
        try:
            classify_pseudo_iso(h0.compose(doubled), n)
        except NotPseudoIsomorphismError:
            return True
        return False

    rec.record("pseudo_iso.rejects", "a map not fixing -K is rejected", True, rejects_scaling)

    index_pairs = list(combinations(range(1, N + 1), 2))
    rec.record("cremona.conjugate", "h~ omega_ij^* h~^-1 = sigma_ij", 0, lambda: _mismatches(
        index_pairs, lambda p: conjugate_to_Z(cremona_pullback(*p, n), L0) == weyl_map(sigma(p, N), n)))
    rec.record("cremona.involution", "omega_ij^* is an involution swapping E_i and E_j", 0, lambda: _mismatches(
        index_pairs, lambda p: (lambda w: w.compose(w).is_identity() and w(X.E(p[0])) == X.E(p[1]))(
            cremona_pullback(*p, n))))
    rec.record("cremona.anticanonical", "omega_ij^* fixes -K_X", 0, lambda: _mismatches(
        index_pairs, lambda p: cremona_pullback(*p, n)(X.anticanonical()) == X.anticanonical()))

    if _allowed(n, CONE_CHECK_N_CAP, unsafe_cap):
        rec.record("aut.bounds", "2^(n+2) <= |Aut(G)| <= 2^(n+2)(n+3)! and W' preserves -K_G, Nef, Eff",
                   [2 ** (n + 2), 2 ** (n + 2) * factorial(N), True],
                   lambda: (lambda r: [r.lower, r.upper, r.passed])(aut_bounds(n)))
    else:
        skipped.append("bridge.aut")

    if not _allowed(n, CONE_CHECK_N_CAP, unsafe_cap):
        skipped.append("bridge.G_cones")
        return rec.checks, skipped

    polytopes = named_cones(n)
    rec.record("transport.Delta", "h~_{M_0} carries the cone over Delta onto E", True,
               lambda: cone_from_rays([h0(lift_point(v, n)) for v in polytopes[DELTA].vertices], Z, Z_EPS_BASIS)
               == cone_E(n))
    rec.record("transport.Fano", "h~_{M_0} carries Nef(X_Fano) onto E^dual", True,
               lambda: cone_from_rays([h0(lift_point(v, n)) for v in polytopes[DELTA_FANO].vertices], Z, Z_EPS_BASIS)
               == cone_E_dual(n))

    def cone_counts():
        cones = G_cones(n)
        counts = [len(cones[NE].rays), len(cones[NEF].rays), len(cones[EFF].rays)]
        if n == 2:
            counts.append(cones[MOV1] == cones[NEF])
        else:
            counts.append(len(cones[MOV1_DUAL].rays))
        return counts

    # cones of curves and divisors on G
    rec.record("G_cones.counts", "rays of NE(G), Nef(G), Eff(G), and Mov^1(G) (= Nef(G) for n = 2) or its dual",
               [2 ** (n + 2), 2 ** (n + 2) + 2 * N, 2 ** (n + 2), True if n == 2 else 2 ** (n + 2) + 2 * N],
               cone_counts)
    rec.record("G_cones.simplicial", "simplicial facets of Eff(G) are {E_{sigma_i(M)}}",
               {frozenset(L.flipped({i}) for i in range(1, N + 1)) for L in labels},
               lambda: set(simplicial_facets(n)))
    rec.record("G_cones.fiber_faces", "phi_i and psi_i contract the planes of their family", 0, lambda: _mismatches(
        [(family, i) for family in Family for i in range(1, N + 1)],
        lambda p: set(face_labels(contraction_face(p[0], p[1], n))) ==
        {L for L in labels if family_parity(p[1], L) == p[0]}))
    return rec.checks, skipped


# ----------------------------------------------------------------------
# runner


SUITES: Dict[Suite, Callable[..., SuiteResult]] = {
    Suite.LATTICE: lattice_suite,
    Suite.CONES: cones_suite,
    Suite.MCD: mcd_suite,
    Suite.BRIDGE: bridge_suite,
}


def _run_suite(name: str, n: int, samples: int, seed: int, unsafe_cap: bool) -> SuiteResult:
    suite = Suite.from_string(name)
    logger.info("Running the %s suite for n=%d", suite.value, n)
    return SUITES[suite](n, samples, seed, unsafe_cap)


def resolve_workers(workers: int = None) -> int:
    """CLI/config value, else the environment variable, else 1."""
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV_VAR, "1") or 1)
    return max(1, workers)


def run_verification(
    n: int,
    suite: Suite = Suite.ALL,
    samples: int = 10_000,
    seed: int = 0,
    unsafe_cap: bool = False,
    workers: int = None,
) -> Report:
    """
    Run one suite (or all of them) for n.

    Raises:
        ValidationError: If n is not an even integer >= 2
        CapExceededError: If n exceeds the exhaustive cap and unsafe_cap is off
    """
    validate_even_dimension(n)
    if n > EXHAUSTIVE_N_CAP and not unsafe_cap:
        raise CapExceededError(f"Verification requested for n={n}, cap is n <= {EXHAUSTIVE_N_CAP} "
                               "(use --unsafe-cap to override)")
    selected = list(SUITES) if suite == Suite.ALL else [suite]
    workers = resolve_workers(workers)
    start = time.perf_counter()
    jobs = [(s.value, n, samples, seed, unsafe_cap) for s in selected]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            results = list(pool.map(_run_suite, *zip(*jobs)))
    else:
        results = [_run_suite(*job) for job in jobs]
    report = Report(n=n, suite=suite.value)
    for checks, skipped in results:
        report.checks.extend(checks)
        report.skipped.extend(skipped)
    report.seconds = time.perf_counter() - start
    logger.info("Verification n=%d suite=%s: %d checks, %d failed, %.2fs",
                n, suite.value, len(report.checks), len(report.failures), report.seconds)
    return report
