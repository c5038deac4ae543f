"""Complex mixed area on unfoldings of doubled polygons.

Doubling a convex polygon gives a flat sphere with cone points ``x_k``.
Cutting it along the segments from an interior source point ``s`` (the
origin) to the cone points unfolds it into the plane as the 2(n+3)-gon
``x_0 s_0 x_1 s_1 ...`` where ``s_k`` is the mirror image of the origin in
edge ``k``.  The ``x_k`` are linear in the ``s_k``, and minus the area of the
unfolding pulls back to a Hermitian form ``M`` on ``C^(n+3)``.

``M(p, q)`` is linear in ``p`` and conjugate-linear in ``q``; as matrices,
``M(p, q) = q^H H p``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .angles import AngleList
from .errors import NotConvex, OriginNotInterior
from .mixed_area import edge_lengths, gram_matrix, normal_fan, polygon_vertices


@dataclass(frozen=True)
class Unfolding:
    s: np.ndarray
    x: np.ndarray
    angles: AngleList

    def polygon(self) -> np.ndarray:
        """Vertices x_0, s_0, x_1, s_1, ... as complex numbers."""
        out = np.empty(2 * len(self.s), dtype=complex)
        out[0::2] = self.x
        out[1::2] = self.s
        return out

    def rotation_residual(self) -> float:
        """max_k |(s_k - x_k) - exp(2i a_k)(s_{k-1} - x_k)|."""
        rot = np.exp(2j * self.angles.radians)
        r = (self.s - self.x) - rot * (np.roll(self.s, 1) - self.x)
        return float(np.max(np.abs(r)))

    def to_json(self) -> dict:
        return {"s": [[float(z.real), float(z.imag)] for z in self.s],
                "x": [[float(z.real), float(z.imag)] for z in self.x]}

    def to_svg(self, size: int = 400, margin: int = 20) -> str:
        """The unfolded 2(n+3)-gon; cone points in black, source images in red."""
        pts = self.polygon()
        lo = np.array([pts.real.min(), pts.imag.min()])
        hi = np.array([pts.real.max(), pts.imag.max()])
        span = max(hi - lo) or 1.0
        k = (size - 2 * margin) / span

        def xy(z):
            # SVG y axis points down
            return margin + (z.real - lo[0]) * k, size - margin - (z.imag - lo[1]) * k

        path = " ".join(f"{px:.3f},{py:.3f}" for px, py in map(xy, pts))
        out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
               f'viewBox="0 0 {size} {size}">',
               f'<polygon points="{path}" fill="#dde8f4" stroke="#204a87" stroke-width="1.5"/>']
        for i, z in enumerate(self.x):
            px, py = xy(z)
            out.append(f'<circle cx="{px:.3f}" cy="{py:.3f}" r="3.5" fill="black">'
                       f'<title>x{i + 1}</title></circle>')
        for i, z in enumerate(self.s):
            px, py = xy(z)
            out.append(f'<circle cx="{px:.3f}" cy="{py:.3f}" r="3.5" fill="#cc0000">'
                       f'<title>s{i + 1}</title></circle>')
        out.append("</svg>")
        return "\n".join(out) + "\n"


def unfold_double(a: AngleList, h) -> Unfolding:
    """Unfolding of the doubled polygon with heights ``h`` from the origin."""
    h = np.asarray(h, dtype=float)
    ell = edge_lengths(a, h)
    bad = np.flatnonzero(ell <= 0)
    if bad.size:
        raise NotConvex(int(bad[0]), float(ell[bad[0]]))
    bad = np.flatnonzero(h <= 0)
    if bad.size:
        raise OriginNotInterior(int(bad[0]), float(h[bad[0]]))
    v = polygon_vertices(a, h)
    x = v[:, 0] + 1j * v[:, 1]
    return Unfolding(embed(a, h), x, a)


def vertex_map(a: AngleList) -> np.ndarray:
    """Matrix X with x = X s: ``x_k = (e^{ia} s_{k-1} - e^{-ia} s_k) / (2i sin a)``."""
    al = a.radians
    N = len(al)
    X = np.zeros((N, N), dtype=complex)
    for k in range(N):
        d = 2j * np.sin(al[k])
        X[k, k - 1] += np.exp(1j * al[k]) / d
        X[k, k] += -np.exp(-1j * al[k]) / d
    return X


def unfolding_map(a: AngleList) -> np.ndarray:
    """Linear map s -> (x_0, s_0, x_1, s_1, ...), shape (2N, N)."""
    N = len(a)
    L = np.zeros((2 * N, N), dtype=complex)
    L[0::2] = vertex_map(a)
    L[1::2] = np.eye(N)
    return L


def area_form(m: int) -> np.ndarray:
    """Hermitian S with ``v^H S v`` the signed area of the closed m-gon v."""
    S = np.zeros((m, m), dtype=complex)
    c = 1 / 4j
    for j in range(m):
        S[j, (j + 1) % m] += c
        S[(j + 1) % m, j] -= c
    return S


def hermitian_matrix(a: AngleList) -> np.ndarray:
    """Matrix of M: minus the unfolded area, pulled back to the s-coordinates."""
    L = unfolding_map(a)
    return -(L.conj().T @ area_form(L.shape[0]) @ L)


def hermitian_form(H: np.ndarray, p, q) -> complex:
    return complex(np.conj(q) @ H @ p)


def embed(a: AngleList, h) -> np.ndarray:
    """Doubling map on heights: ``f(h)_k = 2 h_k u_k`` with u_k a complex unit."""
    return 2 * np.asarray(h, dtype=float) * normal_fan(a).complex_normals


def embedding_matrix(a: AngleList) -> np.ndarray:
    """Columns f(u_k) for the unit heights."""
    return np.diag(2 * normal_fan(a).complex_normals)


def embedding_residual(a: AngleList) -> float:
    """max |M(f(u_i), f(u_j)) - 2 m(u_i, u_j)| over all basis pairs."""
    F = embedding_matrix(a)
    pulled = F.conj().T @ hermitian_matrix(a) @ F
    # entry (j, i) of pulled is M(f(u_i), f(u_j)); both sides are symmetric
    return float(np.max(np.abs(pulled - 2 * gram_matrix(a))))
