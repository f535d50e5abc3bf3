"""Isomorph-free enumeration of small graphs and seeded random graphs.

Canonical form: the lexicographically smallest upper-triangle bit string
(graph6 order) over the leaves of an individualization-refinement tree.
Every labeling reachable as a leaf is derived from isomorphism-invariant
choices, so two graphs get the same form iff they are isomorphic.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .graph import Graph, GraphError, iter_bits
from .invariants import is_free

MAX_ENUM_ORDER = 9


def _refine(adj: Sequence[int], cells: list[int]) -> list[int]:
    """Split ordered cells (vertex masks) until equitable."""
    changed = True
    while changed:
        changed = False
        out: list[int] = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            sig: dict[tuple[int, ...], int] = {}
            for v in iter_bits(cell):
                key = tuple((adj[v] & c).bit_count() for c in cells)
                sig[key] = sig.get(key, 0) | (1 << v)
            if len(sig) > 1:
                changed = True
                out.extend(sig[k] for k in sorted(sig))
            else:
                out.append(cell)
        cells = out
    return cells


def _code(adj: Sequence[int], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _twin_cell(adj: Sequence[int], cell: int) -> bool:
    """True if every permutation of ``cell`` is an automorphism."""
    vs = list(iter_bits(cell))
    first = vs[0]
    outside = adj[first] & ~cell
    inside = (adj[first] & cell).bit_count()
    if inside not in (0, len(vs) - 1):
        return False
    return all(adj[v] & ~cell == outside and (adj[v] & cell).bit_count() == inside for v in vs)


def canonical_labeling(g: Graph) -> tuple[int, list[int]]:
    """Return ``(code, order)`` where ``order[i]`` is the vertex placed at position i."""
    adj = g.adj
    n = g.n
    if n == 0:
        return 0, []
    best: list = [None, None]

    def search(cells: list[int]) -> None:
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if c & (c - 1)), -1)
        if target < 0:
            order = [c.bit_length() - 1 for c in cells]
            code = _code(adj, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        choices = list(iter_bits(cell))
        if _twin_cell(adj, cell):
            choices = choices[:1]
        for v in choices:
            bv = 1 << v
            search(cells[:target] + [bv, cell & ~bv] + cells[target + 1:])

    degree_cells: dict[int, int] = {}
    for v in range(n):
        d = adj[v].bit_count()
        degree_cells[d] = degree_cells.get(d, 0) | (1 << v)
    search([degree_cells[d] for d in sorted(degree_cells)])
    return best[0], best[1]


def canonical_form(g: Graph) -> tuple[int, int]:
    """Hashable isomorphism-class key ``(n, code)``."""
    return g.n, canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    _, order = canonical_labeling(g)
    pos = {v: i for i, v in enumerate(order)}
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for w in iter_bits(g.adj[v]):
            row |= 1 << pos[w]
        adj[pos[v]] = row
    return Graph._trusted(g.n, tuple(adj))


def _extend(g: Graph, nbrs: int) -> Graph:
    n = g.n
    adj = [row | ((nbrs >> v & 1) << n) for v, row in enumerate(g.adj)]
    adj.append(nbrs)
    return Graph._trusted(n + 1, tuple(adj))


@lru_cache(maxsize=None)
def _level(n: int, avoid_key: tuple[Graph, ...]) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph._trusted(0, ()),)
    parents = _level(n - 1, avoid_key)
    seen: dict[tuple[int, int], Graph] = {}
    for parent in parents:
        for nbrs in range(1 << (n - 1)):
            child = _extend(parent, nbrs)
            key = canonical_form(child)
            if key in seen:
                continue
            if any(not is_free(child, h) for h in avoid_key):
                seen[key] = None  # type: ignore[assignment]
                continue
            seen[key] = canonical_graph(child)
    return tuple(sorted((g for g in seen.values() if g is not None), key=lambda g: (g.m, g.adj)))


def enumerate_nonisomorphic(n: int, avoid: Iterable[Graph] = ()) -> Iterator[Graph]:
    """Every isomorphism class of graphs on ``n`` vertices exactly once.

    With ``avoid``, only graphs free of every listed graph are produced.
    Freeness is hereditary under vertex deletion, so the filter is applied
    at every augmentation level and pruned parents are never extended.
    Results are cached per ``(n, avoid)``.
    """
    if not 0 <= n <= MAX_ENUM_ORDER:
        raise GraphError(f"exhaustive enumeration limited to n <= {MAX_ENUM_ORDER}")
    yield from _level(n, tuple(avoid))


def enumerate_up_to(n_max: int, avoid: Iterable[Graph] = (), n_min: int = 1) -> Iterator[Graph]:
    avoid = tuple(avoid)
    for n in range(n_min, n_max + 1):
        yield from enumerate_nonisomorphic(n, avoid)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    adj = [0] * n
    for j in range(n):
        for i in range(j):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph._trusted(n, tuple(adj))


def random_graphs(n: int, p: float, seed: int, count: int) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_graph(n, p, rng)
