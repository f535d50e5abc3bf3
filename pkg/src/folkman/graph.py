"""Bitmask graph representation, combinators and graph6 serialization.

Vertices are ``0..n-1``; ``adj[v]`` is an int whose bit ``w`` is set iff
``{v, w}`` is an edge.  Edges are indexed in graph6 bit order, i.e. the
upper triangle read column by column: ``(0,1), (0,2), (1,2), (0,3), ...``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

MAX_ORDER = 512


class GraphError(ValueError):
    """Invalid graph construction or malformed graph6 input."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside [0, {MAX_ORDER}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbor out of range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for w in iter_bits(row):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee a symmetric loop-free adjacency
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges ``(i, j)`` with ``i < j`` in graph6 (column-major) order."""
        out = []
        for j in range(self.n):
            for i in iter_bits(self.adj[j] & ((1 << j) - 1)):
                out.append((i, j))
        return tuple(out)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: k for k, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_id(self, u: int, v: int) -> int:
        """Dense index of edge ``{u, v}``; raises KeyError if absent."""
        return self.edge_index[(u, v) if u < v else (v, u)]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={emit_graph6(self)!r})"


def make_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside [0, {MAX_ORDER}]")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"loop ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _check_order(n: int) -> None:
    if n > MAX_ORDER:
        raise GraphError(f"combined order {n} exceeds {MAX_ORDER}")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    _check_order(g.n + h.n)
    adj = list(g.adj) + [row << g.n for row in h.adj]
    return Graph._trusted(g.n + h.n, tuple(adj))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets.

    ``h``'s vertices are relabeled to ``g.n .. g.n + h.n - 1``.
    """
    _check_order(g.n + h.n)
    g_all = g.vertex_mask
    h_all = h.vertex_mask << g.n
    adj = [row | h_all for row in g.adj] + [(row << g.n) | g_all for row in h.adj]
    return Graph._trusted(g.n + h.n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph._trusted(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: int | Iterable[int]) -> Graph:
    """Subgraph induced by ``s`` (mask or iterable), relabeled in ascending order."""
    mask = s if isinstance(s, int) else mask_of(s)
    if mask < 0 or mask & ~g.vertex_mask:
        raise GraphError("vertex set out of range")
    keep = list(iter_bits(mask))
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for w in iter_bits(g.adj[v] & mask):
            row |= 1 << pos[w]
        adj.append(row)
    return Graph._trusted(len(keep), tuple(adj))


def delete_vertex(g: Graph, u: int) -> Graph:
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} out of range")
    return induced_subgraph(g, g.vertex_mask & ~(1 << u))


def spanning_subgraph(g: Graph, edge_ids: Iterable[int]) -> Graph:
    """Graph on all of ``g``'s vertices keeping only the listed edges."""
    edges = g.edges
    return make_graph(g.n, (edges[k] for k in edge_ids))


# graph6 ---------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError(f"order {n} too large for graph6")


def emit_graph6(g: Graph) -> str:
    out = [_encode_order(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise GraphError("graph6 string contains characters outside '?'..'~'")
    if data[0] == 63:
        if len(data) >= 4 and data[1] == 63:
            raise GraphError("graph6 orders above 258047 are not supported")
        if len(data) < 4:
            raise GraphError("truncated graph6 order header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
        if n <= 62:
            raise GraphError("non-canonical graph6 order header")
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise GraphError("truncated graph6 bit field")
    if len(body) > need:
        raise GraphError("trailing characters after graph6 bit field")
    if nbits % 6 and body and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise GraphError("nonzero padding bits in graph6 string")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a newline-delimited graph6 stream, skipping blank lines."""
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)
