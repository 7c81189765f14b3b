"""Named, reproducible graph collections for cross-checking the bounds."""

from __future__ import annotations

import os
from itertools import count

from spantree.generators import (
    complete,
    cycle,
    path,
    random_graph,
    random_prufer_tree,
    star,
)
from spantree.graph import Graph, disjoint_union, is_connected
from spantree.io import write_graph6


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """First connected G(n, p) sample among seeds ``seed, seed + 1, ...``."""
    for s in count(seed):
        g = random_graph(n, p, s)
        if is_connected(g):
            return g
    raise AssertionError("unreachable")


def random_trees(k: int, n_min: int, n_max: int, seed: int) -> list[Graph]:
    """``k`` Prüfer-random trees with orders cycling through [n_min, n_max]."""
    span = n_max - n_min + 1
    return [random_prufer_tree(n_min + (i * 5 + seed) % span, seed * 1000 + i) for i in range(k)]


def standard_corpus(seed: int = 2024) -> dict[str, Graph]:
    """Connected factors: K2..K6, P3..P6, C3..C6, S4..S6, 10 trees, 10 random graphs."""
    out: dict[str, Graph] = {}
    for n in range(2, 7):
        out[f"K{n}"] = complete(n)
    for n in range(3, 7):
        out[f"P{n}"] = path(n)
    for n in range(3, 7):
        out[f"C{n}"] = cycle(n)
    for n in range(4, 7):
        out[f"S{n}"] = star(n)
    for i, t in enumerate(random_trees(10, 3, 7, seed)):
        out[f"tree{i}_n{t.n}"] = t
    for i in range(10):
        n = 3 + i % 5
        out[f"rand{i}_n{n}"] = random_connected_graph(n, 0.5, seed * 100 + i * 7)
    return out


def disconnected_corpus() -> dict[str, Graph]:
    k1, k2, k3 = complete(1), complete(2), complete(3)
    return {
        "2K2": disjoint_union(k2, k2),
        "2K3": disjoint_union(k3, k3),
        "E3": Graph(3),
        "K1+P3": disjoint_union(k1, path(3)),
        "C4+K2": disjoint_union(cycle(4), k2),
    }


def write_corpus(directory: str | os.PathLike, graphs: dict[str, Graph]) -> None:
    """Store each graph as ``<name>.g6`` in ``directory``."""
    os.makedirs(directory, exist_ok=True)
    for name, g in graphs.items():
        with open(os.path.join(directory, f"{name}.g6"), "w", encoding="ascii") as fh:
            fh.write(write_graph6(g) + "\n")
