"""Exact spanning-tree counts from the matrix-tree theorem.

Matrices are plain lists of rows of Python ints, so entries never overflow.
"""

from __future__ import annotations

from spantree.graph import Graph

IntegerMatrix = list[list[int]]

# cubic elimination on big ints stays interactive up to about here
SOFT_MAX_N = 400


def laplacian(g: Graph) -> IntegerMatrix:
    """Integer Laplacian D - A of ``g``."""
    q = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        q[u][v] = q[v][u] = -1
        q[u][u] += 1
        q[v][v] += 1
    return q


def minor(m: IntegerMatrix, k: int) -> IntegerMatrix:
    """``m`` with row ``k`` and column ``k`` removed."""
    return [row[:k] + row[k + 1:] for i, row in enumerate(m) if i != k]


def det_fraction_free(m: IntegerMatrix) -> int:
    """Determinant by Bareiss elimination.

    Every division in the update is exact, so all intermediates stay
    integral. A zero pivot is replaced by swapping in a lower row.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            a[i] = ri[: k + 1] + [
                (ri[j] * pivot - f * rk[j]) // prev for j in range(k + 1, n)
            ]
        prev = pivot
    return sign * a[n - 1][n - 1]


def tau_exact(g: Graph, cofactor: int = 0) -> int:
    """Number of spanning trees of ``g`` via the ``cofactor``-th principal minor."""
    if g.n == 1:
        return 1
    return det_fraction_free(minor(laplacian(g), cofactor))
