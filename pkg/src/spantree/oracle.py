"""Brute-force spanning-tree counters, independent of any linear algebra.

Both are exponential and meant only as ground truth for small graphs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from spantree.graph import DomainError, Graph

SUBSET_MAX_EDGES = 24


@dataclass(frozen=True)
class MultiGraph:
    """Loopless multigraph: ``edges`` maps ``(u, v)`` with ``u < v`` to a multiplicity."""

    n: int
    edges: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"vertex count must be positive, got {self.n}")
        canon: Counter = Counter()
        for (u, v), k in dict(self.edges).items():
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DomainError(f"edge ({u}, {v}) out of range")
            if k < 1:
                raise DomainError(f"multiplicity must be >= 1, got {k}")
            canon[(min(u, v), max(u, v))] += k
        object.__setattr__(self, "edges", dict(canon))

    @classmethod
    def from_graph(cls, g: Graph) -> MultiGraph:
        return cls(g.n, {e: 1 for e in g.edges})


def _connected(n: int, edges) -> bool:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _delete_vertex(n: int, edges: dict, v: int) -> dict:
    def relabel(x):
        return x - 1 if x > v else x

    return {(relabel(a), relabel(b)): k for (a, b), k in edges.items() if v not in (a, b)}


def _contract(n: int, edges: dict, u: int, v: int) -> dict:
    """Merge ``v`` into ``u`` (u < v); u-v edges become loops and vanish."""

    def relabel(x):
        if x == v:
            x = u
        return x - 1 if x > v else x

    out: Counter = Counter()
    for (a, b), k in edges.items():
        a, b = relabel(a), relabel(b)
        if a != b:
            out[(min(a, b), max(a, b))] += k
    return dict(out)


def _dc(n: int, edges: dict) -> int:
    if n == 1:
        return 1
    if not _connected(n, edges):
        return 0
    # a pendant vertex hanging by k parallel edges contributes a factor k
    incident = Counter()
    for (a, b), k in edges.items():
        incident[a] += 1
        incident[b] += 1
    for v in range(n):
        if incident[v] == 1:
            k = next(k for e, k in edges.items() if v in e)
            return k * _dc(n - 1, _delete_vertex(n, edges, v))
    (u, v), k = next(iter(edges.items()))
    rest = dict(edges)
    del rest[(u, v)]
    return _dc(n, rest) + k * _dc(n - 1, _contract(n, edges, u, v))


def tau_deletion_contraction(g: Graph | MultiGraph) -> int:
    """tau(G) = tau(G - e) + k * tau(G / e), with e an edge class of multiplicity k."""
    if isinstance(g, Graph):
        g = MultiGraph.from_graph(g)
    return _dc(g.n, dict(g.edges))


def tau_subset_enumeration(g: Graph) -> int:
    """Count the (n-1)-edge subsets of ``g`` that form a spanning tree."""
    if g.m > SUBSET_MAX_EDGES:
        raise DomainError(f"subset enumeration limited to {SUBSET_MAX_EDGES} edges, got {g.m}")
    if g.n == 1:
        return 1
    count = 0
    for subset in combinations(g.edges, g.n - 1):
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                break
            parent[ru] = rv
        else:
            count += 1
    return count
