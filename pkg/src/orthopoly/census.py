"""Deligne-Mostow fixtures and the rational search for orbifold triples."""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .angles import Angle, AngleList, validate
from .cone_manifold import CONE_MANIFOLD, KMAX, MANIFOLD, MATCH_TOL, ORBIFOLD, classify

VERDICT_CODE = {MANIFOLD: "M", ORBIFOLD: "O", CONE_MANIFOLD: "C"}

# Thurston number, angles in units of pi, structure of the real locus
_DM_ROWS = (
    (3, "1/4 1/4 1/4 1/4 1/4 1/4 1/4 1/4", "C"),
    (4, "1/2 1/4 1/4 1/4 1/4 1/4 1/4", "C"),
    (1, "1/3 1/3 1/3 1/3 1/3 1/3", "M"),
    (5, "3/4 1/4 1/4 1/4 1/4 1/4", "C"),
    (6, "1/2 1/2 1/4 1/4 1/4 1/4", "C"),
    (39, "1/2 1/6 1/3 1/3 1/3 1/3", "C"),
    (44, "1/8 3/8 3/8 3/8 3/8 3/8", "C"),
    (66, "7/12 5/12 1/4 1/4 1/4 1/4", "C"),
    (67, "5/12 5/12 5/12 1/4 1/4 1/4", "C"),
    (2, "2/3 1/3 1/3 1/3 1/3", "M"),
    (7, "1/2 3/4 1/4 1/4 1/4", "C"),
    (8, "1/2 1/2 1/2 1/4 1/4", "M"),
    (9, "2/5 2/5 2/5 2/5 2/5", "M"),
    (40, "5/6 1/6 1/3 1/3 1/3", "C"),
    (41, "2/3 1/3 1/3 1/2 1/6", "C"),
    (42, "1/2 1/2 1/2 1/3 1/6", "M"),
    (43, "1/2 1/2 1/3 1/3 1/3", "M"),
    (45, "3/4 1/8 3/8 3/8 3/8", "C"),
    (46, "5/8 5/8 1/4 1/4 1/4", "C"),
    (47, "1/2 3/8 3/8 3/8 3/8", "M"),
    (48, "2/9 4/9 4/9 4/9 4/9", "M"),
    (49, "1/10 7/10 2/5 2/5 2/5", "C"),
    (57, "2/3 1/12 5/12 5/12 5/12", "C"),
    (65, "7/12 7/12 1/6 1/3 1/3", "C"),
    (68, "5/6 5/12 1/4 1/4 1/4", "C"),
    (69, "2/3 7/12 1/4 1/4 1/4", "C"),
    (70, "2/3 5/12 5/12 1/4 1/4", "O"),
    (71, "7/12 5/12 1/2 1/4 1/4", "O"),
    (72, "1/2 1/4 5/12 5/12 5/12", "M"),
    (73, "7/12 5/12 1/3 1/3 1/3", "M"),
    (74, "1/2 1/3 1/3 5/12 5/12", "M"),
    (75, "1/3 5/12 5/12 5/12 5/12", "M"),
    (78, "4/15 8/15 2/5 2/5 2/5", "M"),
    (79, "1/18 11/18 4/9 4/9 4/9", "C"),
    (85, "7/10 11/20 1/4 1/4 1/4", "C"),
    (89, "7/12 7/24 3/8 3/8 3/8", "M"),
)


@dataclass(frozen=True)
class TableRow:
    thurston_id: int
    angles: AngleList
    expected: str

    @property
    def n(self) -> int:
        return self.angles.n


def dm_table() -> list[TableRow]:
    """The 36 angle lists of the Deligne-Mostow orbifolds, in table order."""
    return [TableRow(t, validate(Fraction(x) for x in text.split()), s)
            for t, text, s in _DM_ROWS]


@dataclass(frozen=True)
class RowResult:
    row: TableRow
    computed: str

    @property
    def ok(self) -> bool:
        return self.computed == self.row.expected


@dataclass(frozen=True)
class TableReport:
    rows: tuple[RowResult, ...]

    @property
    def matches(self) -> int:
        return sum(r.ok for r in self.rows)

    @property
    def passed(self) -> bool:
        return self.matches == len(self.rows)


def reproduce_table(tol: float = MATCH_TOL, kmax: int = KMAX) -> TableReport:
    out = []
    for row in dm_table():
        c = classify(row.angles, tol=tol, kmax=kmax)
        out.append(RowResult(row, VERDICT_CODE[c.verdict]))
    return TableReport(tuple(out))


@dataclass(frozen=True)
class SearchHit:
    triple: tuple[Fraction, Fraction, Fraction]
    k: int
    cos_half: float

    @property
    def angles(self) -> tuple[Angle, Angle, Angle]:
        return tuple(Angle(q) for q in self.triple)


def reduced_rationals(max_den: int) -> list[Fraction]:
    """All p/q in (0, 1) with q <= max_den, ascending."""
    return sorted({Fraction(p, q) for q in range(2, max_den + 1) for p in range(1, q)})


def _cos_half_vec(a, b, c):
    sa, sb, sc = np.sin(a), np.sin(b), np.sin(c)
    num = sa * sb * sc - np.sin(a + b + c) * (sa * sb + sb * sc + sc * sa)
    return num / (np.sin(a + b) * np.sin(b + c) * np.sin(c + a))


def _match_cos(v: np.ndarray, kmax: int, tol: float):
    """Best k in [2, kmax] with |v - cos(pi/k)| <= tol, else 0."""
    out = np.zeros(v.shape, dtype=int)
    ok = (v > -tol) & (v < 1)
    if not ok.any():
        return out
    vv = np.clip(v[ok], 0.0, np.nextafter(1.0, 0))
    k0 = np.rint(math.pi / np.arccos(vv)).astype(np.int64)
    res = np.zeros(vv.shape, dtype=int)
    for d in (-1, 0, 1):
        k = k0 + d
        good = (k >= 2) & (k <= kmax) & (res == 0)
        kk = np.where(good, k, 2)
        good &= np.abs(vv - np.cos(math.pi / kk)) <= tol
        res[good] = kk[good]
    out[ok] = res
    return out


def _search_outer(args):
    i, rats, kmax, tol = args
    a = rats[i]
    hits = []
    num = np.array([q.numerator for q in rats], dtype=np.int64)
    den = np.array([q.denominator for q in rats], dtype=np.int64)
    rad = np.array([float(q) for q in rats]) * math.pi
    for j in range(i, len(rats)):
        b = rats[j]
        rest = 1 - a - b
        if rest <= b:
            break
        # third entry c >= b with a + b + c < 1, compared exactly as fractions
        ks = np.arange(j, len(rats))
        ks = ks[num[ks] * rest.denominator < rest.numerator * den[ks]]
        if ks.size == 0:
            continue
        v = _cos_half_vec(float(a) * math.pi, float(b) * math.pi, rad[ks])
        m = _match_cos(v, kmax, tol)
        for kk, val, k in zip(ks[m > 0], v[m > 0], m[m > 0]):
            hits.append(SearchHit((a, b, rats[kk]), int(k), float(val)))
    return hits


def rational_search(max_den: int = 12, kmax: int = 100, tol: float = 1e-9,
                    workers: int | None = None) -> list[SearchHit]:
    """Unordered triples p/q (q <= max_den, sum < 1) whose stratum angle is 2*pi/k.

    Only ``2 <= k <= kmax`` count; k = 1 strata are not singular.  Output is
    sorted by triple.
    """
    if max_den < 2:
        raise ValueError("max_den must be at least 2")
    rats = reduced_rationals(max_den)
    jobs = [(i, rats, kmax, tol) for i in range(len(rats)) if 3 * rats[i] < 1]
    if workers is None:
        workers = 1 if max_den <= 40 else (os.cpu_count() or 1)
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            chunks = list(ex.map(_search_outer, jobs))
    else:
        chunks = [_search_outer(j) for j in jobs]
    hits = [h for chunk in chunks for h in chunk]
    hits.sort(key=lambda h: h.triple)
    return hits
