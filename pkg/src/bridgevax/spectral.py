"""Laplacian spectra of small dense graphs.

Matrices are plain ``numpy.ndarray`` (n, n) float64 arrays; spectra are
ascending 1-D arrays.  The eigensolver is an explicitly ordered cyclic
Jacobi rotation scheme so that repeated runs produce bit-identical
spectra; dense diagonalization is adequate because the graphs handled
here (node neighborhoods) have order equal to a node degree.

Connectivity decisions are never taken from the spectrum: graph
traversal is authoritative, and the Fiedler value is only reported.
"""

from __future__ import annotations

import math

import numpy as np

from .graphs import Graph, connected_components

#: Off-diagonal Frobenius norm target, relative to the max-norm of the
#: input; guarantees eigenvalue error far below the 1e-9 contract.
_OFF_DIAGONAL_TOL = 1e-12

#: Full cyclic sweeps before giving up.
_MAX_SWEEPS = 200

#: |lambda_2| below this is reported as exactly 0.
ZERO_TOL = 1e-9


class ConvergenceError(ArithmeticError):
    """Jacobi iteration failed to reach the off-diagonal target."""

    def __init__(self, residual: float, sweeps: int):
        super().__init__(
            f"eigensolver did not converge after {sweeps} sweeps "
            f"(off-diagonal norm {residual:.3e})"
        )
        self.residual = residual
        self.sweeps = sweeps


def laplacian(g: Graph) -> np.ndarray:
    """Laplacian L = D - A: degrees on the diagonal, -1 per edge."""
    n = g.node_count
    m = np.zeros((n, n), dtype=np.float64)
    for u, nbrs in enumerate(g.adjacency):
        m[u, u] = len(nbrs)
        for v in nbrs:
            m[u, v] = -1.0
    return m


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def eigenvalues(matrix: np.ndarray) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending.

    Cyclic Jacobi: sweeps visit (p, q) pairs in row-major order and
    annihilate each off-diagonal entry in turn.  Raises
    :class:`ConvergenceError` if the off-diagonal norm has not dropped
    below the scaled tolerance within the sweep cap.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n < 2:
        return np.diag(a).copy()

    scale = float(np.max(np.abs(a)))
    tol = _OFF_DIAGONAL_TOL * max(1.0, scale)
    # Entries too small to matter are skipped rather than rotated away,
    # so the rotation count stays bounded.
    skip = tol / max(1, n * n)

    for sweep in range(_MAX_SWEEPS):
        if _off_norm(a) < tol:
            return np.sort(np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
    residual = _off_norm(a)
    if residual < tol:
        return np.sort(np.diag(a))
    raise ConvergenceError(residual=residual, sweeps=_MAX_SWEEPS)


def algebraic_connectivity(g: Graph) -> float:
    """Second-smallest Laplacian eigenvalue (Fiedler value), >= 0.

    Zero exactly when the graph is disconnected, as decided by
    traversal; values within ``ZERO_TOL`` of zero are clamped.
    """
    if g.node_count < 2:
        raise ValueError(
            f"algebraic connectivity needs >= 2 nodes, got {g.node_count}"
        )
    if connected_components(g).component_count > 1:
        return 0.0
    lam2 = float(eigenvalues(laplacian(g))[1])
    if abs(lam2) < ZERO_TOL:
        return 0.0
    return lam2


def acr(g: Graph) -> float:
    """Algebraic connectivity ratio: Fiedler value over node count.

    0 for disconnected graphs; in (0, 1] otherwise, reaching 1 only on
    complete graphs.
    """
    if g.node_count < 2:
        raise ValueError(f"ACR needs >= 2 nodes, got {g.node_count}")
    lam2 = algebraic_connectivity(g)
    if lam2 == 0.0:
        return 0.0
    return lam2 / g.node_count
