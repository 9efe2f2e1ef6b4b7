"""Normalized Laplacian spectrum by cyclic Jacobi rotations.

Solves L phi = lambda D phi through the symmetric matrix
D^{-1/2} L D^{-1/2}.  Floats appear only here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure
from .graph import Graph

OFF_TOL = 1e-12
MAX_SWEEPS = 100


@dataclass(frozen=True)
class LinearSpectrum:
    eigenvalues: tuple[float, ...]
    tolerance: float
    # columns are generalized eigenvectors D^{-1/2} v, ordered like eigenvalues
    vectors: np.ndarray

    @property
    def lambda2(self) -> float:
        return self.eigenvalues[1]

    def vector(self, k: int) -> np.ndarray:
        return self.vectors[:, k]


def normalized_laplacian(g: Graph) -> np.ndarray:
    n = g.n
    mat = np.eye(n)
    inv_sqrt = 1.0 / np.sqrt(np.array(g.degree, dtype=float))
    for h, t in g.edges:
        w = -inv_sqrt[h] * inv_sqrt[t]
        mat[h, t] = w
        mat[t, h] = w
    return mat


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def jacobi_eigh(a: np.ndarray, tol: float = OFF_TOL, max_sweeps: int = MAX_SWEEPS):
    """Eigenvalues and eigenvectors of a symmetric matrix, ascending."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    for _ in range(max_sweeps):
        if _off_norm(a) < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0)) if theta else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        if _off_norm(a) >= tol:
            raise ConvergenceFailure(f"Jacobi did not converge in {max_sweeps} sweeps")
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def linear_spectrum(g: Graph) -> LinearSpectrum:
    w, v = jacobi_eigh(normalized_laplacian(g))
    inv_sqrt = 1.0 / np.sqrt(np.array(g.degree, dtype=float))
    return LinearSpectrum(
        eigenvalues=tuple(float(x) for x in w),
        tolerance=OFF_TOL,
        vectors=inv_sqrt[:, None] * v,
    )
