"""Cyclic Jacobi eigenvalues and inertia for small symmetric/Hermitian matrices."""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import NotSymmetric

ZERO_TOL = 1e-8


class Signature(NamedTuple):
    """Counts of negative, zero and positive eigenvalues."""

    negative: int
    zero: int
    positive: int


def _offdiag_norm(a):
    return math.sqrt(max(np.sum(np.abs(a) ** 2) - np.sum(np.abs(np.diag(a)) ** 2), 0.0))


def jacobi_eigenvalues(matrix, max_sweeps: int = 60) -> np.ndarray:
    """Eigenvalues of a real symmetric or complex Hermitian matrix, ascending.

    Plain cyclic-by-row Jacobi.  For Hermitian input each 2x2 pivot block is
    first made real by a diagonal phase, then annihilated by a real rotation.
    """
    a = np.array(matrix, dtype=complex if np.iscomplexobj(matrix) else float)
    m = a.shape[0]
    if m == 0:
        return np.zeros(0)
    scale = np.max(np.abs(a))
    if scale == 0:
        return np.zeros(m)
    stop = np.finfo(float).eps * scale * 1e-2
    for _ in range(max_sweeps):
        if _offdiag_norm(a) <= stop:
            break
        for p in range(m - 1):
            for q in range(p + 1, m):
                b = a[p, q]
                mag = abs(b)
                if mag <= stop * 1e-3:
                    continue
                app, aqq = a[p, p].real, a[q, q].real
                tau = (aqq - app) / (2 * mag)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.sqrt(1 + tau * tau))
                c = 1 / math.sqrt(1 + t * t)
                s = t * c
                phase = np.conj(b / mag)
                w = np.array([[c, s], [-s * phase, c * phase]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ w
                a[idx, :] = np.conj(w.T) @ a[idx, :]
                a[p, q] = a[q, p] = 0
    return np.sort(np.real(np.diag(a)))


def asymmetry(matrix) -> float:
    """max |A - A^H| relative to max |A|."""
    a = np.asarray(matrix)
    scale = np.max(np.abs(a)) or 1.0
    return float(np.max(np.abs(a - np.conj(a.T))) / scale)


def signature(matrix, tol: float = ZERO_TOL) -> Signature:
    """Inertia of a symmetric or Hermitian matrix.

    An eigenvalue counts as zero when ``|lam| <= tol * max|lam|``.
    """
    defect = asymmetry(matrix)
    if defect > tol:
        raise NotSymmetric(defect)
    lam = jacobi_eigenvalues(matrix)
    return inertia(lam, tol)


def inertia(eigenvalues, tol: float = ZERO_TOL) -> Signature:
    lam = np.asarray(eigenvalues, dtype=float)
    cut = tol * (np.max(np.abs(lam)) if lam.size else 0.0)
    neg = int(np.sum(lam < -cut))
    pos = int(np.sum(lam > cut))
    return Signature(neg, lam.size - neg - pos, pos)


def realify(h) -> np.ndarray:
    """Real symmetric 2m x 2m matrix with each eigenvalue of ``h`` doubled."""
    h = np.asarray(h, dtype=complex)
    re, im = h.real, h.imag
    return np.block([[re, -im], [im, re]])
