"""Cone-manifolds glued from all orderings of an angle list.

Every ordering of the angles (up to rotation and reflection) gives an
orthoscheme; two orderings that differ by swapping neighbouring angles with
sum below pi share a facet and are glued along it.  Singular codimension-2
strata come from triples of angles with sum below pi; the total angle around
them decides whether the glued space is a manifold, an orbifold or only a
cone-manifold.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Sequence

import networkx as nx

from .angles import Angle, AngleList, SUBSET_TOL, compare_to_pi, subset_sum_pi
from .errors import DimensionTooSmall, RatioOutOfRange, TripleSumNotBelowPi
from .orthoscheme import squared_cosine

MANIFOLD, ORBIFOLD, CONE_MANIFOLD = "Manifold", "Orbifold", "ConeManifold"

MATCH_TOL = 1e-9
KMAX = 10000
RATIO_SLACK = 1e-9


def _need_dimension(n: int):
    if n < 2:
        raise DimensionTooSmall(n)


def element_count(n: int) -> int:
    """Number of orthoschemes glued into R: (n+2)!/2."""
    _need_dimension(n)
    return math.factorial(n + 2) // 2


def canonical_ordering(order: Sequence[int], reflect: bool = True) -> tuple[int, ...]:
    """Representative of a cyclic ordering of labels, optionally up to reversal."""
    order = tuple(order)
    i = order.index(0)
    best = order[i:] + order[:i]
    if reflect:
        rev = order[::-1]
        j = rev.index(0)
        best = min(best, rev[j:] + rev[:j])
    return best


def gluing_graph(a: AngleList, double_cover: bool = False) -> nx.Graph:
    """Orderings of the labels as nodes, shared facets as edges.

    Nodes are canonical label orderings (up to rotation, and also reversal
    unless ``double_cover``).  Two nodes are joined when they differ by
    swapping the labels at adjacent positions p, p+1 (cyclically) and the two
    angles sum to strictly less than pi.
    """
    _need_dimension(a.n)
    N = len(a)
    g = nx.Graph()
    for rest in permutations(range(1, N)):
        node = canonical_ordering((0,) + rest, reflect=not double_cover)
        if node in g:
            continue
        g.add_node(node)
    for node in list(g.nodes):
        for p in range(N):
            q = (p + 1) % N
            i, j = node[p], node[q]
            if compare_to_pi((a[i], a[j])) >= 0:
                continue
            swapped = list(node)
            swapped[p], swapped[q] = j, i
            g.add_edge(node, canonical_ordering(swapped, reflect=not double_cover))
    return g


def disconnecting_triple(a: AngleList) -> tuple[int, int, int] | None:
    """Distinct i, j, k whose three pairwise sums are all >= pi, if any."""
    N = len(a)
    for i, j, k in combinations(range(N), 3):
        if all(compare_to_pi((a[x], a[y])) >= 0 for x, y in ((i, j), (j, k), (k, i))):
            return (i, j, k)
    return None


def double_cover_components(a: AngleList) -> tuple[int, tuple[int, int, int] | None]:
    """Number of components of the orientation double cover, with witness.

    Two components exactly when some three angles have pairwise sums >= pi.
    """
    _need_dimension(a.n)
    w = disconnecting_triple(a)
    return (2 if w else 1), w


def bfs_components(a: AngleList) -> int:
    """Components of the double cover counted on the explicit gluing graph."""
    return nx.number_connected_components(gluing_graph(a, double_cover=True))


def stratum_cos_half(a: float, b: float, c: float) -> float:
    """Closed form of cos(theta/2) for the stratum of the triple (radians)."""
    sa, sb, sc = math.sin(a), math.sin(b), math.sin(c)
    num = sa * sb * sc - math.sin(a + b + c) * (sa * sb + sb * sc + sc * sa)
    return num / (math.sin(a + b) * math.sin(b + c) * math.sin(c + a))


def _angle(x) -> Angle:
    return Angle.coerce(x)


def stratum_angle(a, b, c, check_tol: float = 1e-9) -> float:
    """Total cone angle around the codimension-2 stratum of a triple.

    Six orthoschemes meet there; the angle is twice the sum of the three
    distinct dihedral angles, one for each choice of middle angle.  The
    result is cross-checked against :func:`stratum_cos_half`.
    """
    angs = [_angle(x) for x in (a, b, c)]
    if compare_to_pi(angs) >= 0:
        total = sum(x.pi_units for x in angs)
        raise TripleSumNotBelowPi(total)
    x, y, z = (t.radians for t in angs)
    half = 0.0
    for lo, mid, hi in ((y, x, z), (x, y, z), (x, z, y)):
        r = squared_cosine(lo, mid, hi)
        if r > 1 + RATIO_SLACK:
            raise RatioOutOfRange(r)
        half += math.acos(math.sqrt(min(r, 1.0)))
    theta = 2 * half
    assert 0 < theta < 3 * math.pi
    closed = stratum_cos_half(x, y, z)
    if abs(math.cos(half) - closed) > check_tol:
        raise AssertionError(f"stratum angle mismatch: {math.cos(half)} vs {closed}")
    return theta


def match_submultiple(theta: float, tol: float = MATCH_TOL, kmax: int = KMAX,
                      cos_half: float | None = None) -> int | None:
    """k with theta == 2*pi/k, or None."""
    if cos_half is not None and abs(cos_half) <= 1e-12:
        return 2
    k = round(2 * math.pi / theta)
    for cand in (k - 1, k, k + 1):
        if 1 <= cand <= kmax and abs(theta - 2 * math.pi / cand) <= tol:
            return cand
    return None


@dataclass(frozen=True)
class StratumReport:
    triple: tuple[int, int, int]
    values: tuple[Angle, Angle, Angle]
    theta: float
    k: int | None


@dataclass(frozen=True)
class Classification:
    angles: AngleList
    verdict: str
    compact: bool
    double_cover_components: int
    strata: tuple[StratumReport, ...]
    ideal_triples: tuple[tuple[int, int, int], ...]
    regular_pair_strata: int
    witness_noncompact: tuple[int, ...] | None = None
    witness_disconnected: tuple[int, int, int] | None = None
    notes: dict = field(default_factory=dict)

    def distinct_strata(self) -> list[StratumReport]:
        """One report per multiset of angle values."""
        seen, out = set(), []
        for s in self.strata:
            key = tuple(sorted(x.pi_units for x in s.values))
            if key not in seen:
                seen.add(key)
                out.append(s)
        return out


def _triple_report(a: AngleList, idx, tol, kmax) -> StratumReport:
    vals = tuple(a[i] for i in idx)
    theta = stratum_angle(*vals)
    ch = stratum_cos_half(*(v.radians for v in vals))
    return StratumReport(tuple(idx), vals, theta, match_submultiple(theta, tol, kmax, ch))


def strata(a: AngleList, tol: float = MATCH_TOL, kmax: int = KMAX,
           workers: int | None = None):
    """Singular strata and ideal triples of R(a).

    Returns ``(reports, ideal_triples, regular_pairs)``: one report per index
    triple with sum below pi, the triples summing to exactly pi, and the
    number of strata formed by two disjoint pairs with sums below pi (always
    of total angle 2*pi, four right dihedral angles).
    """
    _need_dimension(a.n)
    N = len(a)
    below, ideal = [], []
    for idx in combinations(range(N), 3):
        c = compare_to_pi(a[i] for i in idx)
        if c < 0:
            below.append(idx)
        elif c == 0:
            ideal.append(idx)
    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            reports = list(ex.map(lambda idx: _triple_report(a, idx, tol, kmax), below))
    else:
        reports = [_triple_report(a, idx, tol, kmax) for idx in below]
    reports.sort(key=lambda r: r.triple)
    small_pairs = [p for p in combinations(range(N), 2) if compare_to_pi(a[i] for i in p) < 0]
    regular = sum(1 for p, q in combinations(small_pairs, 2) if not set(p) & set(q))
    return tuple(reports), tuple(ideal), regular


def classify(a: AngleList, tol: float = MATCH_TOL, kmax: int = KMAX,
             subset_tol: float = SUBSET_TOL) -> Classification:
    """Manifold, orbifold or cone-manifold verdict for R(a).

    Compactness looks at arbitrary subsets summing to pi: every ordering is
    present in R, so any subset is contiguous somewhere.
    """
    reports, ideal, regular = strata(a, tol, kmax)
    ks = [r.k for r in reports]
    if all(k == 1 for k in ks):
        verdict = MANIFOLD
    elif all(k is not None for k in ks):
        verdict = ORBIFOLD
    else:
        verdict = CONE_MANIFOLD
    witness = subset_sum_pi(a, subset_tol)
    comps, w3 = double_cover_components(a)
    return Classification(a, verdict, witness is None, comps, reports, ideal, regular,
                          witness, w3)
