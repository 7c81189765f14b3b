"""Simple undirected graphs on dense vertex indices 0..n-1.

A :class:`Graph` is immutable. Its edges are kept as a sorted tuple of
``(u, v)`` pairs with ``u < v``, so two graphs compare equal exactly when
they have the same vertex count and the same edge set.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field


class GraphError(ValueError):
    """Raised when a graph violates a construction invariant."""


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()
    _adj: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise GraphError(f"vertex count must be an int, got {self.n!r}")
        if self.n < 1:
            raise GraphError(f"vertex count must be positive, got {self.n}")
        canon = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            canon.add((min(u, v), max(u, v)))
        edges = tuple(sorted(canon))
        adj = [set() for _ in range(self.n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls(n, tuple(tuple(e) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def degrees(self) -> list[int]:
        """Degree sequence indexed by vertex."""
        return [len(a) for a in self._adj]


def is_connected(g: Graph) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Place ``g2`` after ``g1``, shifting its vertices by ``g1.n``."""
    shifted = [(u + g1.n, v + g1.n) for u, v in g2.edges]
    return Graph(g1.n + g2.n, g1.edges + tuple(shifted))
