"""Exterior-angle lists of convex polygons.

An angle is either an exact rational multiple of pi (stored as a
:class:`~fractions.Fraction` ``q`` meaning ``q*pi``) or a float in radians.
Exact lists make every comparison with pi (sums, subset sums, vertex
characters) exact; floats fall back to small absolute tolerances.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import (AngleOutOfRange, DegenerateConsecutive, SumNotTwoPi,
                     TooFewAngles, UnwrapNotTwoPi)

FLOAT_MARGIN = 1e-12
SUM_TOL = 1e-10
SUBSET_TOL = 1e-9
UNWRAP_TOL = 1e-9

INF = math.inf


@dataclass(frozen=True)
class Angle:
    """A single exterior angle.

    ``value`` is a Fraction (units of pi) for exact angles, or a float in
    radians otherwise.
    """

    value: Fraction | float

    @property
    def exact(self) -> bool:
        return isinstance(self.value, Fraction)

    @property
    def radians(self) -> float:
        if self.exact:
            return float(self.value) * math.pi
        return float(self.value)

    @property
    def pi_units(self) -> Fraction | float:
        """The angle divided by pi; exact when the angle is."""
        if self.exact:
            return self.value
        return self.value / math.pi

    @classmethod
    def parse(cls, text: str) -> "Angle":
        """Parse ``"p/q"`` as p*pi/q, anything else as a decimal radian value."""
        text = text.strip()
        if "/" in text:
            p, q = text.split("/", 1)
            return cls(Fraction(int(p), int(q)))
        return cls(float(text))

    @classmethod
    def coerce(cls, x) -> "Angle":
        if isinstance(x, Angle):
            return x
        if isinstance(x, str):
            return cls.parse(x)
        if isinstance(x, Fraction):
            return cls(x)
        if isinstance(x, int):
            # an int would silently mean radians; be explicit instead
            raise TypeError("integer angles are ambiguous; pass Fraction(p, q) or a float")
        return cls(float(x))

    def __str__(self):
        if self.exact:
            q = self.value
            if q.numerator == 1:
                return f"pi/{q.denominator}"
            return f"{q.numerator}pi/{q.denominator}"
        return repr(self.value)

    def text(self) -> str:
        """Inverse of :meth:`parse`."""
        if self.exact:
            return f"{self.value.numerator}/{self.value.denominator}"
        return repr(self.value)


def compare_to_pi(angles: Iterable[Angle], multiple: int = 1, tol: float = FLOAT_MARGIN) -> int:
    """Sign of ``sum(angles) - multiple*pi``.

    Exact when every angle is rational, otherwise zero means within ``tol``
    radians.
    """
    angles = list(angles)
    if all(a.exact for a in angles):
        diff = sum((a.value for a in angles), Fraction(0)) - multiple
        return (diff > 0) - (diff < 0)
    diff = math.fsum(a.radians for a in angles) - multiple * math.pi
    if abs(diff) <= tol:
        return 0
    return 1 if diff > 0 else -1


@dataclass(frozen=True)
class AngleList:
    """Exterior angles ``alpha_0 .. alpha_{n+2}`` of a convex (n+3)-gon.

    ``angles[k]`` is the turning angle between outward normals ``k-1`` and
    ``k`` (indices cyclic). Build instances with :func:`validate` or
    :meth:`parse`; the constructor does not check the angle conditions.
    """

    angles: tuple[Angle, ...]

    def __len__(self):
        return len(self.angles)

    def __iter__(self):
        return iter(self.angles)

    def __getitem__(self, k):
        return self.angles[k]

    @property
    def n(self) -> int:
        return len(self.angles) - 3

    @property
    def exact(self) -> bool:
        return all(a.exact for a in self.angles)

    @property
    def radians(self) -> np.ndarray:
        return np.array([a.radians for a in self.angles])

    @property
    def pi_units(self) -> tuple:
        return tuple(a.pi_units for a in self.angles)

    @classmethod
    def parse(cls, text: str) -> "AngleList":
        return validate([Angle.parse(t) for t in text.split(",") if t.strip()])

    def text(self) -> str:
        return ",".join(a.text() for a in self.angles)

    def __str__(self):
        return "(" + ", ".join(str(a) for a in self.angles) + ")"

    def rotated(self, shift: int) -> "AngleList":
        k = shift % len(self)
        return AngleList(self.angles[k:] + self.angles[:k])

    def permuted(self, order: Sequence[int]) -> "AngleList":
        return AngleList(tuple(self.angles[i] for i in order))


def validate(raw: Iterable) -> AngleList:
    """Check every angle lies in (0, pi) and the sum is 2*pi; return an :class:`AngleList`.

    Raises
    ------
    TooFewAngles, AngleOutOfRange, SumNotTwoPi
    """
    angles = tuple(Angle.coerce(x) for x in raw)
    if len(angles) < 3:
        raise TooFewAngles(len(angles))
    for k, a in enumerate(angles):
        if a.exact:
            if not 0 < a.value < 1:
                raise AngleOutOfRange(k, a)
        elif not (FLOAT_MARGIN < a.value < math.pi - FLOAT_MARGIN) or not math.isfinite(a.value):
            raise AngleOutOfRange(k, a)
    if compare_to_pi(angles, 2, tol=SUM_TOL) != 0:
        total = sum(a.pi_units for a in angles) if all(a.exact for a in angles) \
            else math.fsum(a.radians for a in angles) / math.pi
        raise SumNotTwoPi(total)
    return AngleList(angles)


def dihedral_images(a: AngleList) -> list[AngleList]:
    """All 2(n+3) rotations and reflections of ``a``."""
    out = []
    for base in (a, AngleList(a.angles[::-1])):
        out.extend(base.rotated(k) for k in range(len(a)))
    return out


def canonicalize(a: AngleList) -> AngleList:
    """Lexicographically least representative under the dihedral group."""
    return min(dihedral_images(a), key=lambda b: b.pi_units)


def _parse_slope(x) -> float:
    if isinstance(x, str):
        t = x.strip().lower()
        if t in ("inf", "+inf", "-inf", "infinity", "oo"):
            return INF
        return float(t)
    x = float(x)
    return INF if math.isinf(x) else x


def line_angle(slope: float) -> float:
    """Angle in [0, pi) of the line through the origin with this slope."""
    if math.isinf(slope):
        return math.pi / 2
    return math.atan(slope) % math.pi


def angles_from_slopes(slopes: Sequence) -> AngleList:
    """Recover exterior angles from the slopes of the lines carrying the normals.

    Normal directions are unwrapped counterclockwise starting from the first
    slope; each step must lie strictly inside (0, pi) and the total turn must
    be 2*pi.  ``angles[0]`` is the closing gap from the last normal back to
    the first.
    """
    s = [_parse_slope(x) for x in slopes]
    if len(s) < 3:
        raise TooFewAngles(len(s))
    lines = [line_angle(x) for x in s]
    steps = []
    N = len(lines)
    for k in range(1, N + 1):
        prev, cur = lines[k - 1], lines[k % N]
        if s[k - 1] == s[k % N]:
            raise DegenerateConsecutive(k - 1)
        d = (cur - prev) % math.pi
        if d <= FLOAT_MARGIN or d >= math.pi - FLOAT_MARGIN:
            raise DegenerateConsecutive(k - 1)
        steps.append(d)
    total = math.fsum(steps)
    if abs(total - 2 * math.pi) > UNWRAP_TOL:
        raise UnwrapNotTwoPi(total)
    # steps[k-1] turns from normal k-1 to normal k; the last one closes the loop
    alphas = [steps[-1]] + steps[:-1]
    # absorb rounding so the list sums to 2*pi to double precision
    alphas[0] = 2 * math.pi - math.fsum(alphas[1:])
    return validate(alphas)


def normal_directions(a: AngleList) -> np.ndarray:
    """Cumulative normal directions: phi_0 = 0, phi_k = phi_{k-1} + alpha_k."""
    r = a.radians
    phi = np.zeros(len(a))
    phi[1:] = np.cumsum(r[1:])
    return phi


def subset_sum_pi(a: AngleList, tol: float = SUBSET_TOL) -> tuple[int, ...] | None:
    """Indices of a subset of angles summing to pi, or None.

    Subsets of size 2 .. n+1 are searched in lexicographic order; the test is
    exact for all-rational lists.
    """
    N = len(a)
    for size in range(2, N - 1):
        for idx in combinations(range(N), size):
            if compare_to_pi((a[i] for i in idx), 1, tol=tol) == 0:
                return idx
    return None


PRESETS = {
    # slopes of the lines carrying the normals of a polygon whose deformation
    # space is the compact 5-dimensional Coxeter orthoscheme found by Tumarkin
    "tumarkin": (math.sqrt(5), -2.0, -1.0, 0.0, 1.0, INF, -3.0, (math.sqrt(5) - 3) / 2),
}
