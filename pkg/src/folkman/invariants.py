"""Exact structural invariants: subgraph containment, cliques, colorings.

Containment is plain (not induced) subgraph containment throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .graph import Graph, complement, iter_bits


class BudgetExceeded(RuntimeError):
    """An exact solver was asked for an instance above its size budget."""


# subgraph embeddings --------------------------------------------------


def _twin_classes(h: Graph) -> list[int]:
    """Label each vertex of ``h`` by its twin class.

    ``u`` and ``v`` are twins when ``N(u) - {v} == N(v) - {u}``; swapping
    them is an automorphism, so the search may order their images.
    """
    cls = list(range(h.n))
    for v in range(h.n):
        for u in range(v):
            if cls[u] != u:
                continue
            bu, bv = 1 << u, 1 << v
            if h.adj[u] & ~bv == h.adj[v] & ~bu:
                cls[v] = u
                break
    return cls


def _search_order(h: Graph) -> list[int]:
    """Connectivity-greedy order: next vertex has most placed neighbors, then degree."""
    order: list[int] = []
    placed = 0
    remaining = set(range(h.n))
    deg = h.degrees()
    while remaining:
        v = max(remaining, key=lambda w: ((h.adj[w] & placed).bit_count(), deg[w], -w))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


class _Embedder:
    """Backtracking enumeration of embeddings of ``h`` into ``g``.

    Forward checking keeps a candidate mask per unmapped pattern vertex.
    Twin pattern vertices are forced onto increasing host vertices, so each
    embedding is produced once per twin-class relabeling orbit.
    """

    def __init__(self, g: Graph, h: Graph) -> None:
        self.g = g
        self.h = h
        self.order = _search_order(h)
        twin = _twin_classes(h)
        # pos -> earlier position of the previous member of the same twin class
        self.prev_twin: list[int] = []
        self.rest_in_class: list[int] = []
        seen: dict[int, int] = {}
        for pos, w in enumerate(self.order):
            c = twin[w]
            self.prev_twin.append(seen.get(c, -1))
            seen[c] = pos
        for pos, w in enumerate(self.order):
            c = twin[w]
            self.rest_in_class.append(sum(1 for w2 in self.order[pos:] if twin[w2] == c))
        gdeg = g.degrees()
        full = g.vertex_mask
        self.initial: list[int] = []
        for w in self.order:
            d = h.degree(w)
            m = 0
            for x in range(g.n):
                if gdeg[x] >= d:
                    m |= 1 << x
            self.initial.append(m & full)
        index = {w: p for p, w in enumerate(self.order)}
        # for each position, the later positions adjacent in h
        self.later_nbrs = [
            [index[x] for x in iter_bits(h.adj[w]) if index[x] > p] for p, w in enumerate(self.order)
        ]

    def embeddings(self) -> Iterator[list[int]]:
        """Yield maps ``phi`` with ``phi[w]`` the host image of pattern vertex ``w``."""
        h, g = self.h, self.g
        k = h.n
        if k > g.n:
            return
        if k == 0:
            yield []
            return
        image = [0] * k
        cands = list(self.initial)
        if any(c == 0 for c in cands):
            return
        order = self.order
        prev_twin = self.prev_twin
        later = self.later_nbrs
        rest = self.rest_in_class
        gadj = g.adj

        def rec(pos: int, cands: list[int]) -> Iterator[None]:
            if pos == k:
                yield None
                return
            avail = cands[pos]
            pt = prev_twin[pos]
            if pt >= 0:
                avail &= ~((2 << image[pt]) - 1)
            # this vertex and every later twin need distinct images from avail
            if avail.bit_count() < rest[pos]:
                return
            for x in iter_bits(avail):
                bx = 1 << x
                nxt = cands[:]
                ok = True
                for p in range(pos + 1, k):
                    nxt[p] &= ~bx
                for p in later[pos]:
                    nxt[p] &= gadj[x]
                    if not nxt[p]:
                        ok = False
                        break
                if not ok:
                    continue
                image[pos] = x
                yield from rec(pos + 1, nxt)

        for _ in rec(0, cands):
            phi = [0] * k
            for pos, w in enumerate(order):
                phi[w] = image[pos]
            yield phi


def iter_embeddings(g: Graph, h: Graph) -> Iterator[list[int]]:
    """All embeddings of ``h`` in ``g`` up to permutations of twin vertices of ``h``."""
    return _Embedder(g, h).embeddings()


def contains_subgraph(g: Graph, h: Graph) -> list[int] | None:
    """Return one embedding ``phi`` (``phi[w]`` in V(g)) of ``h`` into ``g``, or None."""
    for phi in iter_embeddings(g, h):
        return phi
    return None


def is_free(g: Graph, h: Graph) -> bool:
    return contains_subgraph(g, h) is None


def is_valid_embedding(g: Graph, h: Graph, phi: list[int]) -> bool:
    if len(phi) != h.n or len(set(phi)) != h.n or any(not 0 <= x < g.n for x in phi):
        return False
    return all(g.has_edge(phi[a], phi[b]) for a, b in h.edges)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return contains_subgraph(g, h) is not None


# cliques --------------------------------------------------------------


def _color_sort(adj: tuple[int, ...], cand: int) -> tuple[list[int], list[int]]:
    """Greedy sequential coloring of ``cand``; returns vertices and color bounds ascending."""
    verts: list[int] = []
    bounds: list[int] = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        q = uncolored
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~adj[v] & ~low
            uncolored &= ~low
            verts.append(v)
            bounds.append(color)
    return verts, bounds


def max_clique(g: Graph) -> list[int]:
    """Exact maximum clique by branch and bound with a greedy-coloring bound.

    Vertices are renumbered by descending degree so the coloring is tighter.
    """
    n = g.n
    if n == 0:
        return []
    perm = sorted(range(n), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(perm)}
    adj = tuple(sum(1 << pos[w] for w in iter_bits(g.adj[v])) for v in perm)

    best: list[int] = []
    # greedy seed
    cand = (1 << n) - 1
    while cand:
        v = max(iter_bits(cand), key=lambda x: (adj[x] & cand).bit_count())
        best.append(v)
        cand &= adj[v]
    best_size = len(best)
    current: list[int] = []

    def expand(cand: int) -> None:
        nonlocal best, best_size
        verts, bounds = _color_sort(adj, cand)
        for i in range(len(verts) - 1, -1, -1):
            if len(current) + bounds[i] <= best_size:
                return
            v = verts[i]
            current.append(v)
            nxt = cand & adj[v]
            if nxt:
                expand(nxt)
            elif len(current) > best_size:
                best = list(current)
                best_size = len(best)
            current.pop()
            cand &= ~(1 << v)

    expand((1 << n) - 1)
    return sorted(perm[v] for v in best)


def clique_number(g: Graph) -> tuple[int, list[int]]:
    w = max_clique(g)
    return len(w), w


def independence_number(g: Graph) -> tuple[int, list[int]]:
    w = max_clique(complement(g))
    return len(w), w


def iter_cliques(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """All k-cliques as ascending vertex tuples."""
    if k == 0:
        yield ()
        return

    def rec(chosen: tuple[int, ...], cand: int) -> Iterator[tuple[int, ...]]:
        if len(chosen) == k:
            yield chosen
            return
        need = k - len(chosen)
        while cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            yield from rec(chosen + (v,), cand & g.adj[v])

    yield from rec((), g.vertex_mask)


def has_clique(g: Graph, k: int) -> bool:
    return next(iter_cliques(g, k), None) is not None


# chromatic number -----------------------------------------------------

CHROMATIC_MAX_ORDER = 64


def _k_colorable(g: Graph, k: int, seed: list[int]) -> list[int] | None:
    """DSATUR-ordered backtracking for a proper k-coloring; ``seed`` clique gets colors 0..|seed|-1."""
    n = g.n
    color = [-1] * n
    # used[c] = mask of vertices colored c
    used = [0] * k
    for c, v in enumerate(seed):
        color[v] = c
        used[c] |= 1 << v
    uncolored = g.vertex_mask & ~sum(1 << v for v in seed)
    adj = g.adj

    def pick() -> int:
        best, best_key = -1, None
        for v in iter_bits(uncolored):
            sat = sum(1 for c in range(k) if adj[v] & used[c])
            key = (sat, (adj[v] & uncolored).bit_count())
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def rec() -> bool:
        nonlocal uncolored
        if not uncolored:
            return True
        v = pick()
        bv = 1 << v
        uncolored &= ~bv
        highest = max(color) if n else -1
        for c in range(min(k, highest + 2)):
            if adj[v] & used[c]:
                continue
            color[v] = c
            used[c] |= bv
            if rec():
                return True
            used[c] &= ~bv
            color[v] = -1
        uncolored |= bv
        return False

    return color if rec() else None


def chromatic_number(g: Graph) -> tuple[int, list[int]]:
    """Exact chromatic number and a proper coloring, by increasing the color count."""
    if g.n > CHROMATIC_MAX_ORDER:
        raise BudgetExceeded(f"chromatic number limited to n <= {CHROMATIC_MAX_ORDER}")
    if g.n == 0:
        return 0, []
    seed = max_clique(g)
    for k in range(max(1, len(seed)), g.n + 1):
        col = _k_colorable(g, k, seed)
        if col is not None:
            return k, col
    raise AssertionError("unreachable: n colors always suffice")


def is_proper_coloring(g: Graph, color: list[int]) -> bool:
    return all(color[a] != color[b] for a, b in g.edges)


# components -----------------------------------------------------------


class ComponentTag(str, Enum):
    BIPARTITE = "BIPARTITE"
    ODD_CYCLE = "ODD_CYCLE"
    TRIANGLE = "TRIANGLE"
    OTHER = "OTHER"


@dataclass(frozen=True)
class ComponentClass:
    tag: ComponentTag
    vertices: int  # mask in the host graph
    parts: tuple[int, int] | None = None  # bipartition masks when BIPARTITE


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components (vertex masks) of ``g[within]``, ordered by least vertex."""
    rest = g.vertex_mask if within is None else within
    out = []
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def _two_color(g: Graph, comp: int) -> tuple[int, int] | None:
    low = comp & -comp
    side = [low, 0]
    seen = low
    frontier = low
    k = 0
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= comp
        if nxt & side[k]:
            return None
        nxt &= ~seen
        k ^= 1
        side[k] |= nxt
        seen |= nxt
        frontier = nxt
    return side[0], side[1]


def is_bipartite(g: Graph, within: int | None = None) -> tuple[int, int] | None:
    """A bipartition ``(A, B)`` of ``g[within]`` as masks, or None."""
    a = b = 0
    for comp in components(g, within):
        sides = _two_color(g, comp)
        if sides is None:
            return None
        a |= sides[0]
        b |= sides[1]
    return a, b


def classify_components(g: Graph, within: int | None = None) -> list[ComponentClass]:
    out = []
    for comp in components(g, within):
        sides = _two_color(g, comp)
        if sides is not None:
            out.append(ComponentClass(ComponentTag.BIPARTITE, comp, sides))
            continue
        size = comp.bit_count()
        two_regular = all((g.adj[v] & comp).bit_count() == 2 for v in iter_bits(comp))
        if two_regular and size == 3:
            out.append(ComponentClass(ComponentTag.TRIANGLE, comp))
        elif two_regular and size % 2 == 1:
            out.append(ComponentClass(ComponentTag.ODD_CYCLE, comp))
        else:
            out.append(ComponentClass(ComponentTag.OTHER, comp))
    return out
