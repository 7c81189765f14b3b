"""Constructors for the graph families used throughout the package.

Labeling conventions:

* ``path``: vertices 0..n-1 joined consecutively.
* ``cycle``: the path plus the closing edge (0, n-1).
* ``star``, ``fan``, ``wheel``: the hub is the highest index ``n-1``.
  ``fan`` n has a path on 0..n-2 under the hub, ``wheel`` n a cycle on
  0..n-2. The vertex count always includes the hub.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterator, Sequence
from itertools import combinations

from spantree.graph import DomainError, Graph

_MASK64 = (1 << 64) - 1

FAMILY_MIN_N = {
    "complete": 1,
    "path": 1,
    "star": 1,
    "cycle": 3,
    "wheel": 3,
    "fan": 2,
}


def complete(n: int) -> Graph:
    return generate("complete", n)


def path(n: int) -> Graph:
    return generate("path", n)


def cycle(n: int) -> Graph:
    return generate("cycle", n)


def star(n: int) -> Graph:
    return generate("star", n)


def fan(n: int) -> Graph:
    return generate("fan", n)


def wheel(n: int) -> Graph:
    return generate("wheel", n)


def generate(kind: str, n: int) -> Graph:
    if kind not in FAMILY_MIN_N:
        raise DomainError(f"unknown family {kind!r}; choose from {sorted(FAMILY_MIN_N)}")
    if n < FAMILY_MIN_N[kind]:
        raise DomainError(f"{kind} needs n >= {FAMILY_MIN_N[kind]}, got {n}")

    if kind == "complete":
        edges = list(combinations(range(n), 2))
    elif kind == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == "cycle":
        edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    elif kind == "star":
        edges = [(i, n - 1) for i in range(n - 1)]
    elif kind == "fan":
        hub = n - 1
        edges = [(i, i + 1) for i in range(hub - 1)] + [(i, hub) for i in range(hub)]
    else:
        # wheel 3 collapses to K3: a 2-vertex rim "cycle" is a single edge
        hub = n - 1
        rim = [(i, i + 1) for i in range(hub - 1)] + [(0, hub - 1)]
        edges = rim + [(i, hub) for i in range(hub)]
    return Graph(n, tuple(edges))


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    """Labeled tree on ``n`` vertices encoded by the Prüfer sequence ``seq``.

    At each step the smallest-index leaf is joined to the next sequence
    entry; the last two remaining vertices are joined at the end.
    """
    if n < 2:
        raise DomainError(f"Prüfer decoding needs n >= 2, got {n}")
    if len(seq) != n - 2:
        raise DomainError(f"sequence length {len(seq)} != n - 2 = {n - 2}")
    for x in seq:
        if not 0 <= x < n:
            raise DomainError(f"sequence entry {x} out of range [0, {n})")

    remaining = [0] * n
    for x in seq:
        remaining[x] += 1
    leaves = [v for v in range(n) if remaining[v] == 0]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        remaining[x] -= 1
        if remaining[x] == 0:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, tuple(edges))


def splitmix64(seed: int) -> Iterator[int]:
    """SplitMix64 stream of 64-bit outputs.

    state += 0x9E3779B97F4A7C15
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    out = z ^ (z >> 31)          (all arithmetic mod 2**64)
    """
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def uniform_stream(seed: int) -> Iterator[float]:
    """Doubles in [0, 1) from the top 53 bits of each SplitMix64 output."""
    for z in splitmix64(seed):
        yield (z >> 11) * (1.0 / (1 << 53))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) sample, reproducible from ``(n, p, seed)`` on any platform.

    Pairs ``(u, v)`` with ``u < v`` are visited in lexicographic order and
    each consumes one uniform draw ``x``; the edge is kept when ``x < p``.
    """
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"edge probability must lie in [0, 1], got {p}")
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    draws = uniform_stream(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if next(draws) < p]
    return Graph(n, tuple(edges))


def random_prufer_tree(n: int, seed: int) -> Graph:
    """Uniformly random labeled tree, Prüfer entries drawn from SplitMix64."""
    if n < 2:
        raise DomainError(f"trees need n >= 2, got {n}")
    draws = splitmix64(seed)
    seq = [next(draws) % n for _ in range(n - 2)]
    return prufer_decode(seq, n)
