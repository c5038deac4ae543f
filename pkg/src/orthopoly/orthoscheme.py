"""Hyperbolic orthoschemes attached to angle lists.

Modulo its kernel, the mixed-area form turns the unit heights ``u_k`` into a
Napier cycle in Minkowski space.  The positive members are outward normals of
a hyperbolic orthoscheme whose points are the convex polygons with the given
exterior angles (up to translation and scaling).

Index conventions: vector ``k`` sits between angles ``a[k]`` and ``a[k+1]``,
so the pair of vectors ``(k, k+1)`` sees the angle triple
``(a[k], a[k+1], a[k+2])`` and the four normal lines ``k-1 .. k+2``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.optimize import bisect

from .angles import (AngleList, SUBSET_TOL, compare_to_pi, normal_directions,
                     validate)
from .errors import (DimensionTooSmall, NoSolutionForSeed, NotNapier,
                     RepeatedDirection)
from .linalg import signature
from .mixed_area import gram_matrix

SPACELIKE, LIGHTLIKE, TIMELIKE = "spacelike", "lightlike", "timelike"

PARALLEL_TOL = 1e-9
COXETER_TOL = 1e-9
COXETER_KMAX = 10000


def _need_dimension(a: AngleList):
    if a.n < 2:
        raise DimensionTooSmall(a.n)


def vertex_characters(a: AngleList) -> tuple[str, ...]:
    """Causal character of each vector of the Napier cycle."""
    N = len(a)
    out = []
    for k in range(N):
        c = compare_to_pi((a[k], a[(k + 1) % N]))
        out.append(SPACELIKE if c < 0 else LIGHTLIKE if c == 0 else TIMELIKE)
    return tuple(out)


@dataclass(frozen=True)
class OrthoschemeType:
    type: int
    n: int
    characters: tuple[str, ...]

    @property
    def positive(self) -> tuple[int, ...]:
        """Indices of the space-like vectors (the facets)."""
        return tuple(k for k, c in enumerate(self.characters) if c == SPACELIKE)

    @property
    def vertices(self) -> tuple[int, ...]:
        """Indices of the non-positive vectors (finite or ideal vertices)."""
        return tuple(k for k, c in enumerate(self.characters) if c != SPACELIKE)


def classify_type(a: AngleList) -> OrthoschemeType:
    """Type 3 minus the number of non-space-like vectors."""
    _need_dimension(a)
    chars = vertex_characters(a)
    bad = [k for k, c in enumerate(chars) if c != SPACELIKE]
    N = len(a)
    if len(bad) > 2 or (len(bad) == 2 and (bad[1] - bad[0]) % N not in (1, N - 1)):
        raise AssertionError(f"impossible character pattern {chars} for {a}")
    return OrthoschemeType(3 - len(bad), a.n, chars)


def squared_cosine(x: float, mid: float, y: float) -> float:
    """``sin x sin y / (sin(x+mid) sin(mid+y))`` for angles in radians.

    Equals cos^2 of the dihedral angle between the two facets that share
    ``mid`` when the value is below one.
    """
    return math.sin(x) * math.sin(y) / (math.sin(x + mid) * math.sin(mid + y))


@dataclass(frozen=True)
class FacetRelation:
    """How two facets of an orthoscheme meet.

    ``kind`` is ``"orthogonal"``, ``"angle"`` (``value`` = dihedral angle),
    ``"parallel"`` or ``"ultraparallel"`` (``value`` = distance).
    """

    kind: str
    value: float | None = None
    ratio: float | None = None

    def coxeter_order(self, tol: float = COXETER_TOL, kmax: int = COXETER_KMAX) -> int | None:
        """k with dihedral angle pi/k, or None."""
        if self.kind == "orthogonal":
            return 2
        if self.kind != "angle":
            return None
        k = round(math.pi / self.value)
        for cand in (k - 1, k, k + 1):
            if 2 <= cand <= kmax and abs(self.value - math.pi / cand) <= tol:
                return cand
        return None


def relation_from_ratio(r: float, parallel_tol: float = PARALLEL_TOL) -> FacetRelation:
    if abs(r - 1) <= parallel_tol:
        return FacetRelation("parallel", None, r)
    if r < 1:
        theta = math.acos(math.sqrt(r))
        assert 0 < theta <= math.pi / 2
        return FacetRelation("angle", theta, r)
    return FacetRelation("ultraparallel", math.acosh(math.sqrt(r)), r)


@dataclass(frozen=True)
class FacetRelations:
    type: OrthoschemeType
    pairs: dict = field(default_factory=dict)

    @property
    def positive(self):
        return self.type.positive

    def __getitem__(self, key):
        i, j = key
        return self.pairs[(min(i, j), max(i, j))]

    def adjacent(self):
        """(i, j, relation) for facet pairs that are not orthogonal by structure."""
        return [(i, j, r) for (i, j), r in self.pairs.items() if r.kind != "orthogonal"]


def facet_relations(a: AngleList, parallel_tol: float = PARALLEL_TOL) -> FacetRelations:
    t = classify_type(a)
    al = a.radians
    N = len(a)
    pos = t.positive
    pairs = {}
    for x, i in enumerate(pos):
        for j in pos[x + 1:]:
            if (j - i) % N == 1:
                lo = i
            elif (i - j) % N == 1:
                lo = j
            else:
                pairs[(i, j)] = FacetRelation("orthogonal")
                continue
            r = squared_cosine(al[lo], al[(lo + 1) % N], al[(lo + 2) % N])
            pairs[(i, j)] = relation_from_ratio(r, parallel_tol)
    return FacetRelations(t, pairs)


def _homogeneous(slope) -> tuple[float, float]:
    if isinstance(slope, str):
        slope = float(slope)
    if math.isinf(slope):
        return (0.0, 1.0)
    return (1.0, float(slope))


def _det(p, q):
    return p[0] * q[1] - p[1] * q[0]


def cross_ratio(a, b, c, d) -> float:
    """``(d-a)/(a-b) * (b-c)/(c-d)`` on extended-real slopes.

    Evaluated with 2x2 determinants of homogeneous coordinates so infinite
    slopes need no special case.  Vectors ``(x, y)`` with ``x != 0`` are also
    accepted for any argument.
    """
    pa, pb, pc, pd = (p if isinstance(p, tuple) else _homogeneous(p) for p in (a, b, c, d))
    num = _det(pa, pd) * _det(pc, pb)
    den = _det(pb, pa) * _det(pd, pc)
    if den == 0 or num == 0:
        raise RepeatedDirection()
    return num / den


def cross_ratio_angle(lines: Sequence) -> float:
    """``-[U1, U2, U3, U4]`` for four normal lines; equals tan^2 of the dihedral angle."""
    if len(lines) != 4:
        raise ValueError("need exactly four lines")
    return -cross_ratio(*lines)


def normal_lines(a: AngleList) -> list[tuple[float, float]]:
    """Direction vectors of the normal lines, for :func:`cross_ratio`."""
    phi = normal_directions(a)
    return [(math.cos(p), math.sin(p)) for p in phi]


@dataclass(frozen=True)
class CoxeterDiagram:
    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int, object], ...]
    shape: str

    def to_dot(self, name: str = "coxeter") -> str:
        lines = [f"graph {name} {{", "  node [shape=circle];"]
        for k in self.nodes:
            lines.append(f"  F{k + 1};")
        for i, j, label in self.edges:
            if label == 3:
                attr = ""
            elif label == "inf":
                attr = ' [label="inf"]'
            elif label == "dashed":
                attr = " [style=dashed]"
            else:
                attr = f' [label="{label}"]'
            lines.append(f"  F{i + 1} -- F{j + 1}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def coxeter_check(rel: FacetRelations, tol: float = COXETER_TOL,
                  kmax: int = COXETER_KMAX) -> CoxeterDiagram | None:
    """Coxeter diagram of the orthoscheme, or None if some angle is not pi/k."""
    edges = []
    for (i, j), r in sorted(rel.pairs.items()):
        if r.kind == "orthogonal":
            continue
        if r.kind == "parallel":
            edges.append((i, j, "inf"))
        elif r.kind == "ultraparallel":
            edges.append((i, j, "dashed"))
        else:
            k = r.coxeter_order(tol, kmax)
            if k is None:
                return None
            if k > 2:
                edges.append((i, j, k))
    shape = "cycle" if rel.type.type == 3 else "chain"
    return CoxeterDiagram(rel.positive, tuple(edges), shape)


@dataclass(frozen=True)
class Compactness:
    compact: bool
    finite_volume: bool = True
    witness: tuple[int, int] | None = None


def is_compact(a: AngleList, tol: float = SUBSET_TOL) -> Compactness:
    """Compact iff no cyclic run ``a[k] + ... + a[k']`` equals pi.

    The witness is ``(k, k')``, inclusive and 0-based.
    """
    N = len(a)
    for length in range(1, N - 1):
        for start in range(N):
            run = [a[(start + i) % N] for i in range(length)]
            if compare_to_pi(run, 1, tol=tol) == 0:
                return Compactness(False, True, (start, (start + length - 1) % N))
    return Compactness(True)


def positive_gram(a: AngleList) -> tuple[np.ndarray, tuple[int, ...]]:
    """Normalized Gram matrix of the facet normals, in chain order.

    For types 1 and 2 the order starts right after the non-positive vectors
    so that the facets form a chain; returns the matrix and the original
    vector indices.
    """
    t = classify_type(a)
    N = len(a)
    start = 0 if t.type == 3 else (t.vertices[-1] + 1) % N
    if t.type == 1 and set(t.vertices) == {0, N - 1}:
        start = 1
    order = tuple(k for k in ((start + i) % N for i in range(N)) if k in t.positive)
    G = gram_matrix(a)[np.ix_(order, order)]
    d = 1 / np.sqrt(np.diag(G))
    return G * np.outer(d, d), order


DEFAULT_SEEDS = (
    (math.pi / 3, math.pi / 3),
    (math.pi / 2, math.pi / 3),
    (math.pi / 3, math.pi / 2),
    (math.pi / 2, math.pi / 2),
)
BISECT_TOL = 1e-12
ROUNDTRIP_TOL = 1e-8


def _gram_shape(G: np.ndarray) -> int:
    """Check the Napier sign pattern; return the orthoscheme type."""
    c = G.shape[0]
    if G.ndim != 2 or G.shape[1] != c or c < 3:
        raise NotNapier("need a square matrix with at least 3 facets")
    if np.max(np.abs(G - G.T)) > 1e-10:
        raise NotNapier("matrix is not symmetric")
    if np.max(np.abs(np.diag(G) - 1)) > 1e-10:
        raise NotNapier("diagonal must be normalized to 1")
    cycle = abs(G[0, c - 1]) > 1e-12
    for i in range(c):
        for j in range(i + 1, c):
            adjacent = j == i + 1 or (cycle and (i, j) == (0, c - 1))
            if adjacent and not G[i, j] < 0:
                raise NotNapier(f"entry ({i + 1},{j + 1}) must be negative")
            if not adjacent and abs(G[i, j]) > 1e-12:
                raise NotNapier(f"entry ({i + 1},{j + 1}) must vanish")
    if cycle:
        return 3
    return 2 if signature(G).zero else 1


def _solve_next(a0: float, a1: float, target: float) -> float:
    """The angle c in (0, pi - a1) with squared_cosine(a0, a1, c) == target."""
    lo, hi = 1e-15, math.pi - a1 - 1e-15
    f = lambda c: squared_cosine(a0, a1, c) - target  # noqa: E731
    if hi <= lo or f(lo) >= 0 or f(hi) <= 0:
        raise NoSolutionForSeed("target outside the attainable range")
    return bisect(f, lo, hi, xtol=BISECT_TOL, maxiter=200)


def _sweep(G: np.ndarray, kind: int, seed) -> AngleList:
    c = G.shape[0]
    n = {3: c - 3, 2: c - 2, 1: c - 1}[kind]
    steps = n if kind == 1 else n + 1
    al = list(seed)
    if al[0] + al[1] >= math.pi:
        raise NoSolutionForSeed("seed makes the first facet non-space-like")
    for j in range(steps):
        al.append(_solve_next(al[j], al[j + 1], G[j, j + 1] ** 2))
    if kind == 1:
        al.append(2 * math.pi - math.fsum(al))
    elif abs(math.fsum(al) - 2 * math.pi) > ROUNDTRIP_TOL:
        raise NoSolutionForSeed("angles do not close up to 2*pi")
    else:
        al[-1] = 2 * math.pi - math.fsum(al[:-1])
    try:
        out = validate(al)
        back, _ = positive_gram(out)
    except Exception as exc:
        raise NoSolutionForSeed(str(exc)) from exc
    if back.shape != G.shape or np.max(np.abs(back - G)) > ROUNDTRIP_TOL:
        raise NoSolutionForSeed("round trip does not reproduce the Gram matrix")
    return out


def angles_from_gram(G, seeds=None, n_random: int = 16, rng_seed: int = 0) -> AngleList:
    """Exterior angles whose orthoscheme has the given facet Gram matrix.

    ``G`` is the normalized Gram matrix of the facet normals in chain (or
    cycle) order, as returned by :func:`positive_gram`.  Starting from a
    seed pair ``(a0, a1)`` each further angle is found by bisection from one
    off-diagonal entry.  Several seeds are tried before giving up.
    """
    G = np.asarray(G, dtype=float)
    kind = _gram_shape(G)
    if seeds is None:
        rng = np.random.default_rng(rng_seed)
        extra = [tuple(rng.uniform(0.05, 0.95, 2) * math.pi) for _ in range(n_random)]
        seeds = list(DEFAULT_SEEDS) + extra
    last = None
    for seed in seeds:
        try:
            return _sweep(G, kind, seed)
        except NoSolutionForSeed as exc:
            last = exc
    raise NoSolutionForSeed(f"no seed produced a valid angle list ({last})")
