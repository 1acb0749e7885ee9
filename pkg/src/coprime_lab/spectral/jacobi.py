"""Cyclic Jacobi eigenvalue iteration for dense real symmetric matrices.

Sweeps use a round-robin (tournament) ordering: each round pairs every
index with exactly one partner, so the rotations of a round touch disjoint
row/column pairs and can be applied together as vectorised updates.
"""

from __future__ import annotations

import numpy as np


class JacobiConvergenceError(RuntimeError):
    def __init__(self, residual: float, sweeps: int):
        super().__init__(f"Jacobi did not converge after {sweeps} sweeps (off-diagonal norm {residual:.3e})")
        self.residual = residual
        self.sweeps = sweeps


def _rounds(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Round-robin schedule over ``n`` indices (one bye per round if n is odd)."""
    m = n + (n % 2)
    players = list(range(m))
    out = []
    for _ in range(m - 1):
        pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        pairs = [(min(p, q), max(p, q)) for p, q in pairs if q < n and p < n]
        if pairs:
            p, q = zip(*pairs)
            out.append((np.array(p), np.array(q)))
        players = [players[0], players[-1], *players[1:-1]]
    return out


def off_norm(a: np.ndarray) -> float:
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def jacobi_eigenvalues(
    matrix,
    rel_tol: float = 1e-12,
    max_sweeps: int = 100,
) -> tuple[np.ndarray, float, int]:
    """Eigenvalues of a symmetric matrix, ascending.

    Iterates until the off-diagonal Frobenius norm is below
    ``rel_tol * ||M||_F``. Returns ``(values, residual, sweeps)``.
    """
    a = np.array(matrix, dtype=np.float64)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0), 0.0, 0
    scale = float(np.linalg.norm(a))
    target = rel_tol * scale
    schedule = _rounds(n)
    residual = off_norm(a)
    sweeps = 0
    while residual > target:
        if sweeps >= max_sweeps:
            raise JacobiConvergenceError(residual, sweeps)
        # threshold pivoting: skip small entries in the first sweeps
        thresh = 0.2 * residual / (n * n) if sweeps < 3 else 0.0
        for p, q in schedule:
            apq = a[p, q]
            active = np.abs(apq) > thresh
            active &= apq != 0.0
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            with np.errstate(over="ignore"):
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            t[theta == 0.0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            cp, cq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = c * cp - s * cq
            a[:, q] = s * cp + c * cq
            rp, rq = a[p, :].copy(), a[q, :].copy()
            cc, ss = c[:, None], s[:, None]
            a[p, :] = cc * rp - ss * rq
            a[q, :] = ss * rp + cc * rq
            a[p, q] = 0.0
            a[q, p] = 0.0
        sweeps += 1
        residual = off_norm(a)
    return np.sort(np.diag(a)), residual, sweeps
