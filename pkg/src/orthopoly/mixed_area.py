"""Mixed area of convex polygons with prescribed outward normals.

A polygon with normals ``u_k`` is described by its support numbers
(heights) ``h_k``.  The mixed area is the symmetric bilinear form

    m(P, Q) = -1/2 * sum_k h_k(P) * l_k(Q)

where ``l_k`` is the length of edge ``k``.  ``m(P, P)`` is minus the area.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .angles import AngleList, normal_directions
from .errors import NotConvex, WrongDimension
from .linalg import ZERO_TOL, Signature, signature  # noqa: F401  (re-export)


@dataclass(frozen=True)
class NormalFan:
    phi: np.ndarray

    @property
    def normals(self) -> np.ndarray:
        """Unit outward normals as an (N, 2) array."""
        return np.column_stack([np.cos(self.phi), np.sin(self.phi)])

    @property
    def complex_normals(self) -> np.ndarray:
        return np.exp(1j * self.phi)


def normal_fan(a: AngleList) -> NormalFan:
    return NormalFan(normal_directions(a))


def length_operator(a: AngleList) -> np.ndarray:
    """Matrix L with ``edge_lengths(a, h) == L @ h``."""
    al = a.radians
    N = len(al)
    sa = np.sin(al)
    L = np.zeros((N, N))
    for k in range(N):
        nxt = (k + 1) % N
        L[k, k] = -np.cos(al[k]) / sa[k] - np.cos(al[nxt]) / sa[nxt]
        L[k, k - 1] += 1 / sa[k]
        L[k, nxt] += 1 / sa[nxt]
    return L


def edge_lengths(a: AngleList, h) -> np.ndarray:
    """Edge lengths from heights.

    ``l_k = (h_{k-1} - h_k cos a_k)/sin a_k + (h_{k+1} - h_k cos a_{k+1})/sin a_{k+1}``
    """
    h = np.asarray(h, dtype=float)
    al = a.radians
    if h.shape != al.shape:
        raise ValueError(f"need {len(al)} heights, got {h.shape}")
    sa, ca = np.sin(al), np.cos(al)
    h_prev, h_next = np.roll(h, 1), np.roll(h, -1)
    sa_next, ca_next = np.roll(sa, -1), np.roll(ca, -1)
    return (h_prev - h * ca) / sa + (h_next - h * ca_next) / sa_next


def gram_matrix(a: AngleList) -> np.ndarray:
    """Matrix of the mixed area in the basis of unit heights.

    Diagonal ``sin(a_k + a_{k+1}) / (2 sin a_k sin a_{k+1})``, cyclic
    neighbours ``-1/(2 sin a)`` of the shared angle, and structural zeros
    elsewhere.
    """
    al = a.radians
    N = len(al)
    G = np.zeros((N, N))
    for k in range(N):
        nxt = (k + 1) % N
        G[k, k] = 0.5 * np.sin(al[k] + al[nxt]) / (np.sin(al[k]) * np.sin(al[nxt]))
        G[k, nxt] = G[nxt, k] = -0.5 / np.sin(al[nxt])
    return G


def mixed_area(a: AngleList, p, q) -> float:
    return float(np.asarray(p, dtype=float) @ gram_matrix(a) @ np.asarray(q, dtype=float))


def kernel_basis(a: AngleList) -> tuple[np.ndarray, np.ndarray]:
    """Heights of the two unit translations: ``cos(phi_k)`` and ``sin(phi_k)``."""
    phi = normal_directions(a)
    return np.cos(phi), np.sin(phi)


def point_heights(a: AngleList, point) -> np.ndarray:
    """Heights ``<p, u_k>`` of the degenerate polygon reduced to ``point``."""
    return normal_fan(a).normals @ np.asarray(point, dtype=float)


def polygon_vertices(a: AngleList, h) -> np.ndarray:
    """Vertices ``x_k`` = intersection of support lines ``k-1`` and ``k``.

    Edge ``k`` runs from ``x_k`` to ``x_{k+1}``.
    """
    u = normal_fan(a).normals
    h = np.asarray(h, dtype=float)
    out = np.empty((len(h), 2))
    for k in range(len(h)):
        A = np.array([u[k - 1], u[k]])
        out[k] = np.linalg.solve(A, [h[k - 1], h[k]])
    return out


def is_convex(a: AngleList, h) -> bool:
    return bool(np.all(edge_lengths(a, h) > 0))


def _require_convex(a, h):
    ell = edge_lengths(a, h)
    bad = np.flatnonzero(ell <= 0)
    if bad.size:
        raise NotConvex(int(bad[0]), float(ell[bad[0]]))


def minkowski_defect(a: AngleList, p, q) -> float:
    """``m(P,Q)^2 - m(P,P) m(Q,Q)``; non-negative for convex P, Q.

    Raises NotConvex if either polygon has an edge of length <= 0.
    """
    _require_convex(a, p)
    _require_convex(a, q)
    G = gram_matrix(a)
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    pq, pp, qq = p @ G @ q, p @ G @ p, q @ G @ q
    return float(pq * pq - pp * qq)


def negative_eigenvector_check(a: AngleList) -> float:
    """Residual of the explicit negative eigenpair of the 3x3 form (n = 0)."""
    if a.n != 0:
        raise WrongDimension(a.n, 0)
    s1, s2, s3 = np.sin(a.radians)
    v = np.array([1.0, s1 / s3, s2 / s3])
    lam = -0.5 * (s1 ** 2 + s2 ** 2 + s3 ** 2) / (s1 * s2 * s3)
    r = gram_matrix(a) @ v - lam * v
    return float(np.max(np.abs(r)))


def negative_eigenvalue(a: AngleList) -> float:
    s1, s2, s3 = np.sin(a.radians)
    return float(-0.5 * (s1 ** 2 + s2 ** 2 + s3 ** 2) / (s1 * s2 * s3))


def random_convex_heights(a: AngleList, rng, spread: float = 0.5, shift: float = 1.0) -> np.ndarray:
    """Random heights of a convex polygon with normals fixed by ``a``.

    Starts from the polygon circumscribed about the unit circle, perturbs
    every height, rescales the perturbation until all edges are positive, and
    finally translates by a random vector.
    """
    N = len(a)
    base = np.ones(N)
    delta = rng.uniform(-1, 1, N) * spread
    while True:
        h = base + delta
        if is_convex(a, h):
            break
        delta *= 0.5
    return h * rng.uniform(0.2, 5.0) + point_heights(a, rng.normal(size=2) * shift)
