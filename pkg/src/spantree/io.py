"""Reading and writing graphs as edge lists and graph6 strings.

Edge-list format::

    # optional comment lines
    n m
    u v        (exactly m lines, 0-indexed)

graph6 is supported for n <= 62 only (single size byte).
"""

from __future__ import annotations

import os

from spantree.graph import Graph

GRAPH6_MAX_N = 62


class ParseError(ValueError):
    """Base class for input format errors. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class HeaderError(ParseError):
    pass


class VertexRangeError(ParseError):
    pass


class SelfLoopError(ParseError):
    pass


class EdgeCountError(ParseError):
    pass


class Graph6Error(ParseError):
    pass


class UnsupportedSizeError(Graph6Error):
    pass


def _parse_int(tok: str, lineno: int, exc: type[ParseError]) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        raise exc(f"not a decimal integer: {tok!r}", lineno) from None


def parse_edge_list(text: str) -> Graph:
    lines = [
        (i, ln.strip())
        for i, ln in enumerate(text.splitlines(), start=1)
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise HeaderError("missing 'n m' header", 1)
    hline, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise HeaderError(f"expected 'n m', got {header!r}", hline)
    n = _parse_int(parts[0], hline, HeaderError)
    m = _parse_int(parts[1], hline, HeaderError)
    if n < 1 or m < 0:
        raise HeaderError(f"invalid header counts n={n} m={m}", hline)

    body = lines[1:]
    if len(body) != m:
        at = body[m][0] if len(body) > m else hline
        raise EdgeCountError(f"header declares {m} edges, found {len(body)}", at)
    edges = []
    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {ln!r}", lineno)
        u = _parse_int(parts[0], lineno, ParseError)
        v = _parse_int(parts[1], lineno, ParseError)
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexRangeError(f"vertex {x} out of range [0, {n})", lineno)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
    return Graph(n, tuple(edges))


def write_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) for c in s]
    for pos, c in enumerate(codes):
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c} at offset {pos} outside [63, 126]")
    if codes[0] == 126:
        raise UnsupportedSizeError(f"graphs with n > {GRAPH6_MAX_N} are not supported")
    n = codes[0] - 63
    if n == 0:
        raise Graph6Error("graph6 string declares n = 0")

    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = codes[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"body too short: need {nbytes} bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error(f"trailing garbage after {nbytes} body bytes")

    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((u, v))
            k += 1
    return Graph(n, tuple(edges))


def write_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise UnsupportedSizeError(f"graph6 writer supports n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = [g.has_edge(u, v) for v in range(1, g.n) for u in range(v)]
    bits += [False] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def read_graph(path: str | os.PathLike, fmt: str | None = None) -> Graph:
    """Load a graph from ``path``; ``.g6`` files are graph6, anything else an edge list."""
    if fmt is None:
        fmt = "graph6" if os.fspath(path).endswith(".g6") else "edges"
    with open(path, encoding="ascii") as fh:
        text = fh.read()
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edges":
        return parse_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}")


def format_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return write_graph6(g) + "\n"
    if fmt == "edges":
        return write_edge_list(g)
    raise ValueError(f"unknown format {fmt!r}")
