from __future__ import annotations

from spantree.graph import Graph


def product_index(i: int, j: int, n2: int) -> int:
    """Row-major index of the product vertex (i, j)."""
    return i * n2 + j


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Cartesian product of ``g1`` and ``g2``.

    Vertex ``(i, j)`` gets index ``i * g2.n + j``. Two vertices are adjacent
    when they agree in one coordinate and are adjacent in the other, so the
    result has ``n1 * m2 + n2 * m1`` edges.
    """
    n1, n2 = g1.n, g2.n
    edges = []
    for i in range(n1):
        base = i * n2
        edges.extend((base + a, base + b) for a, b in g2.edges)
    for a, b in g1.edges:
        edges.extend((a * n2 + j, b * n2 + j) for j in range(n2))
    return Graph(n1 * n2, tuple(edges))
