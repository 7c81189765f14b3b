"""Laplacian spectra and spectral spanning-tree counts.

Eigenvalues come from a cyclic Jacobi solver using round-robin ordering: each
step applies ``n/2`` disjoint plane rotations at once, which is exactly the
same as applying them one after another since they touch disjoint rows and
columns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from spantree.exact import laplacian
from spantree.graph import Graph

REL_OFF_TOL = 1e-12
ZERO_CLAMP = 1e-9
MAX_SWEEPS = 60


class ConvergenceError(RuntimeError):
    def __init__(self, residual: float, sweeps: int):
        self.residual = residual
        self.sweeps = sweeps
        super().__init__(
            f"Jacobi iteration did not converge in {sweeps} sweeps "
            f"(off-diagonal norm {residual:.3e})"
        )


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    tol: float = 0.0

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """One Jacobi sweep as ``n - 1`` (or ``n``) rounds of disjoint index pairs."""
    size = n + (n % 2)
    players = list(range(size))
    rounds = []
    for _ in range(size - 1):
        ps, qs = [], []
        for k in range(size // 2):
            p, q = players[k], players[size - 1 - k]
            if p < n and q < n:
                ps.append(min(p, q))
                qs.append(max(p, q))
        rounds.append((np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def jacobi_eigenvalues(
    a, rel_tol: float = REL_OFF_TOL, max_sweeps: int = MAX_SWEEPS
) -> tuple[np.ndarray, float]:
    """Eigenvalues of the symmetric matrix ``a`` and the final off-diagonal norm.

    Sweeps stop once the off-diagonal Frobenius norm is at most ``rel_tol``
    times the Frobenius norm of the input.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T, rtol=0, atol=0):
        raise ValueError("matrix must be symmetric")
    target = rel_tol * float(np.linalg.norm(a))
    off = _off_norm(a)
    rounds = _round_robin(n) if n > 1 else []
    sweeps = 0
    while off > target:
        if sweeps >= max_sweeps:
            raise ConvergenceError(off, sweeps)
        for p, q in rounds:
            apq = a[p, q]
            live = apq != 0.0
            if not live.any():
                continue
            p, q, apq = p[live], q[live], apq[live]
            # t = sign(theta) / (|theta| + sqrt(theta^2 + 1)), written to avoid overflow
            with np.errstate(over="ignore"):
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            big = np.abs(theta) > 1e150
            th = np.where(big, 1.0, theta)
            t = np.where(th >= 0, 1.0, -1.0) / (np.abs(th) + np.sqrt(th * th + 1.0))
            t = np.where(big, 0.5 / np.where(big, theta, 1.0), t)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            colp, colq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = colp * c - colq * s
            a[:, q] = colp * s + colq * c
            rowp, rowq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * rowp - s[:, None] * rowq
            a[q, :] = s[:, None] * rowp + c[:, None] * rowq
            a[p, q] = 0.0
            a[q, p] = 0.0
        sweeps += 1
        off = _off_norm(a)
    return np.sort(np.diag(a)), off


def laplacian_spectrum(g: Graph) -> Spectrum:
    """Ascending Laplacian eigenvalues; values within 1e-9 of zero become 0."""
    vals, off = jacobi_eigenvalues(laplacian(g))
    vals = np.where(np.abs(vals) <= ZERO_CLAMP, 0.0, vals)
    return Spectrum(tuple(float(v) for v in np.sort(vals)), off)


def _log_nonzero_product(values) -> float:
    if any(v <= 0.0 for v in values):
        return -math.inf
    return math.fsum(math.log(v) for v in values)


def log_tau_from_spectrum(s: Spectrum) -> float:
    """Natural log of the tree count implied by a Laplacian spectrum."""
    n = len(s)
    if n == 1:
        return 0.0
    return _log_nonzero_product(s.values[1:]) - math.log(n)


def tau_spectral(g: Graph) -> float:
    s = laplacian_spectrum(g)
    if g.n == 1:
        return 1.0
    vals = s.values[1:]
    if any(v == 0.0 for v in vals):
        return 0.0
    return math.prod(vals) / g.n


def product_spectrum(s1: Spectrum, s2: Spectrum) -> Spectrum:
    """All pairwise sums of the two spectra, sorted."""
    sums = np.add.outer(s1.as_array(), s2.as_array()).ravel()
    return Spectrum(tuple(float(v) for v in np.sort(sums)), s1.tol + s2.tol)


def log_tau_product_spectral(g1: Graph, g2: Graph) -> float:
    """Natural log of the product tree count assembled from factor spectra.

    Returns ``-inf`` when either factor is disconnected.
    """
    s1, s2 = laplacian_spectrum(g1), laplacian_spectrum(g2)
    lt1, lt2 = log_tau_from_spectrum(s1), log_tau_from_spectrum(s2)
    if lt1 == -math.inf or lt2 == -math.inf:
        return -math.inf
    cross = np.add.outer(s1.as_array()[1:], s2.as_array()[1:]).ravel()
    return lt1 + lt2 + math.fsum(np.log(cross).tolist())


def tau_product_spectral(g1: Graph, g2: Graph) -> float:
    """Product tree count from factor spectra; ``inf`` if it overflows a double."""
    lt = log_tau_product_spectral(g1, g2)
    if lt == -math.inf:
        return 0.0
    try:
        return math.exp(lt)
    except OverflowError:
        return math.inf
