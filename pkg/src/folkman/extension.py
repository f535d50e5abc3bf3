"""Constructive good edge colorings extracted from nonexistence arguments.

Colors are ``RED = 0`` and ``BLUE = 1``.  An edge coloring is a list aligned
with ``graph.edges`` (graph6 edge order).  Every public builder verifies its
output with an independent monochromatic-clique scan before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .constructions import book, complete, j_graph, khat, path
from .graph import Graph, delete_vertex, induced_subgraph, iter_bits, join, make_graph, mask_of
from .invariants import ComponentTag, classify_components, has_clique, is_free, iter_cliques

RED, BLUE = 0, 1


class ExtensionError(ValueError):
    """A precondition of a coloring construction does not hold."""


class ClassTag(str, Enum):
    J3_FREE = "j3free"
    J4_FREE = "j4free"
    B3_FREE = "b3free"
    K1P4_FREE = "k1p4free"
    JK_FREE = "jkfree"


@dataclass(frozen=True)
class GraphClass:
    """Graphs avoiding one forbidden subgraph.  ``JK_FREE`` with ``k`` avoids J_k."""

    tag: ClassTag
    k: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "tag", ClassTag(self.tag))
        if (self.tag is ClassTag.JK_FREE) != (self.k is not None):
            raise ValueError("k is required for JK_FREE and only for it")

    def forbidden(self) -> Graph:
        if self.tag is ClassTag.J3_FREE:
            return j_graph(3)
        if self.tag is ClassTag.J4_FREE:
            return j_graph(4)
        if self.tag is ClassTag.B3_FREE:
            return book(3)
        if self.tag is ClassTag.K1P4_FREE:
            return join(complete(1), path(4))
        return j_graph(self.k)

    def contains(self, g: Graph) -> bool:
        return is_free(g, self.forbidden())


J3_FREE = GraphClass(ClassTag.J3_FREE)
J4_FREE = GraphClass(ClassTag.J4_FREE)
B3_FREE = GraphClass(ClassTag.B3_FREE)
K1P4_FREE = GraphClass(ClassTag.K1P4_FREE)


# helpers --------------------------------------------------------------


def monochromatic_cliques(g: Graph, colors: Sequence[int], k: int, color: int | None = None) -> list[tuple[int, ...]]:
    """k-cliques of ``g`` whose edges all share one color (optionally a given color)."""
    if len(colors) != g.m:
        raise ExtensionError("coloring length does not match the edge count")
    out = []
    for c in (RED, BLUE) if color is None else (color,):
        adj = [0] * g.n
        for (a, b), x in zip(g.edges, colors):
            if x == c:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
        sub = Graph._trusted(g.n, tuple(adj))
        out.extend(iter_cliques(sub, k))
    return out


def is_good(g: Graph, colors: Sequence[int], k: int = 3) -> bool:
    """No monochromatic K_k."""
    return not monochromatic_cliques(g, colors, k)


def _check_good(g: Graph, colors: Sequence[int], k: int, what: str) -> None:
    if len(colors) != g.m or any(c not in (RED, BLUE) for c in colors):
        raise ExtensionError(f"{what} is not a total red-blue coloring of {g.m} edges")
    bad = monochromatic_cliques(g, colors, k)
    if bad:
        raise ExtensionError(f"{what} has a monochromatic K_{k} on {bad[0]}")


def _lift_from_deleted(g: Graph, u: int, chi: Sequence[int]) -> list[int]:
    """Copy a coloring of ``g - u`` onto ``g``'s edges; edges at ``u`` stay -1."""
    sub = delete_vertex(g, u)
    if len(chi) != sub.m:
        raise ExtensionError(f"coloring of G-u must have {sub.m} entries, got {len(chi)}")
    out = [-1] * g.m
    for (a, b), c in zip(sub.edges, chi):
        a2 = a + (a >= u)
        b2 = b + (b >= u)
        out[g.edge_id(a2, b2)] = c
    return out


# neighborhood plans ---------------------------------------------------


@dataclass(frozen=True)
class ComponentPlan:
    """One component of ``G[N(u)]``.

    ``BIPARTITE``: ``first``/``second`` are the two sides.  ``ODD_CYCLE`` and
    ``TRIANGLE``: ``first`` spans exactly the edge ``edge``, ``second`` is
    independent.  Masks use the host's vertex labels.
    """

    tag: ComponentTag
    first: int
    second: int
    edge: tuple[int, int] | None = None


@dataclass(frozen=True)
class NeighborhoodPlan:
    u: int
    components: tuple[ComponentPlan, ...]


def _odd_cycle_split(g: Graph, comp: int) -> ComponentPlan:
    # start at the lexicographically smallest edge (a, b) and walk a, b, c2, c3, ...
    a = (comp & -comp).bit_length() - 1
    nb = g.adj[a] & comp
    b = (nb & -nb).bit_length() - 1
    walk = [a, b]
    while len(walk) < comp.bit_count():
        prev, cur = walk[-2], walk[-1]
        walk.append((g.adj[cur] & comp & ~(1 << prev)).bit_length() - 1)
    second = mask_of(walk[2::2])
    first = comp & ~second
    tag = ComponentTag.TRIANGLE if len(walk) == 3 else ComponentTag.ODD_CYCLE
    return ComponentPlan(tag, first, second, (a, b))


def _plan(g: Graph, u: int) -> NeighborhoodPlan:
    nbrs = g.adj[u]
    parts = []
    for cc in classify_components(g, nbrs):
        if cc.tag is ComponentTag.BIPARTITE:
            parts.append(ComponentPlan(cc.tag, cc.parts[0], cc.parts[1]))
        elif cc.tag in (ComponentTag.ODD_CYCLE, ComponentTag.TRIANGLE):
            parts.append(_odd_cycle_split(g, cc.vertices))
        else:
            raise ExtensionError(
                f"component {sorted(iter_bits(cc.vertices))} of N({u}) is neither bipartite nor an odd cycle"
            )
    return NeighborhoodPlan(u, tuple(parts))


def classify_neighborhood(g: Graph, u: int, cls: GraphClass) -> NeighborhoodPlan:
    """Split each component of ``G[N(u)]`` for the neighborhood extension rule.

    B_3-free hosts have neighborhoods of maximum degree 2 (paths and cycles);
    (K_1+P_4)-free hosts have P_4-free neighborhoods (stars and triangles).
    """
    if not 0 <= u < g.n:
        raise ExtensionError(f"vertex {u} out of range")
    if not cls.contains(g):
        raise ExtensionError(f"graph is not {cls.tag.value}")
    nbrs = g.adj[u]
    if cls.tag is ClassTag.B3_FREE:
        for v in iter_bits(nbrs):
            if (g.adj[v] & nbrs).bit_count() > 2:
                raise ExtensionError(f"K_1,3 centered at {v} inside N({u})")
    if cls.tag is ClassTag.K1P4_FREE:
        if not is_free(induced_subgraph(g, nbrs), path(4)):
            raise ExtensionError(f"P_4 inside N({u})")
    return _plan(g, u)


def _apply_plan(g: Graph, plan: NeighborhoodPlan, out: list[int]) -> None:
    u = plan.u
    for cp in plan.components:
        if cp.tag is ComponentTag.BIPARTITE:
            first_color = RED
        else:
            first_color = BLUE if out[g.edge_id(*cp.edge)] == RED else RED
        for v in iter_bits(cp.first):
            out[g.edge_id(u, v)] = first_color
        for v in iter_bits(cp.second):
            out[g.edge_id(u, v)] = 1 - first_color


def extend_edge_coloring(g: Graph, u: int, chi: Sequence[int], cls: GraphClass) -> list[int]:
    """Extend a triangle-good coloring of ``E(G-u)`` to ``E(G)``.

    Bipartite components of ``G[N(u)]`` get their ``u``-edges colored by side;
    for an odd cycle or triangle with split ``U_1 (edge e) / U_2``, edges to
    ``U_1`` take the color opposite to ``e`` and edges to ``U_2`` take ``e``'s color.
    """
    plan = classify_neighborhood(g, u, cls)
    _check_good(delete_vertex(g, u), chi, 3, "chi")
    out = _lift_from_deleted(g, u, chi)
    _apply_plan(g, plan, out)
    _check_good(g, out, 3, "extended coloring")
    return out


def extend_edge_coloring_split(
    g: Graph, u: int, chi: Sequence[int], k: int, u1: Iterable[int], u2: Iterable[int]
) -> list[int]:
    """Extend a coloring of ``E(G-u)`` with no monochromatic K_{k+1}: edges to ``u1`` red, to ``u2`` blue."""
    if k < 2:
        raise ExtensionError("k must be at least 2")
    m1, m2 = mask_of(u1), mask_of(u2)
    if m1 & m2 or (m1 | m2) != g.adj[u]:
        raise ExtensionError("u1 and u2 must partition N(u)")
    if not is_free(g, j_graph(k + 2)):
        raise ExtensionError(f"graph contains J_{k + 2}")
    for name, m in (("u1", m1), ("u2", m2)):
        if has_clique(induced_subgraph(g, m), k):
            raise ExtensionError(f"{name} contains K_{k}")
    _check_good(delete_vertex(g, u), chi, k + 1, "chi")
    out = _lift_from_deleted(g, u, chi)
    for v in iter_bits(m1):
        out[g.edge_id(u, v)] = RED
    for v in iter_bits(m2):
        out[g.edge_id(u, v)] = BLUE
    _check_good(g, out, k + 1, "extended coloring")
    return out


# whole-graph builders -------------------------------------------------


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    return list(iter_cliques(g, 3))


def _j4_free_coloring(g: Graph) -> list[int]:
    out = [RED] * g.m
    for a, b, c in _triangles(g):
        # triangles are edge-disjoint: two red edges, the highest-index edge blue
        ids = sorted((g.edge_id(a, b), g.edge_id(a, c), g.edge_id(b, c)))
        out[ids[2]] = BLUE
    return out


def build_good_coloring(g: Graph, cls: GraphClass) -> list[int]:
    """A red-blue edge coloring of ``g`` with no monochromatic triangle.

    J_4-free (and J_3-free) graphs: triangles are edge-disjoint and each gets
    two red edges and one blue.  B_3-free and (K_1+P_4)-free graphs: vertices
    are peeled in descending index order and re-inserted one at a time with
    the neighborhood extension rule.
    """
    if cls.tag not in (ClassTag.J3_FREE, ClassTag.J4_FREE, ClassTag.B3_FREE, ClassTag.K1P4_FREE):
        raise ExtensionError(f"no builder for class {cls.tag.value}")
    if not cls.contains(g):
        raise ExtensionError(f"graph is not {cls.tag.value}")
    if cls.tag in (ClassTag.J3_FREE, ClassTag.J4_FREE):
        out = _j4_free_coloring(g)
    else:
        out = []
        adj = [0] * g.n
        for t in range(g.n):
            # g[0..t] is g[0..t-1] plus vertex t; the edge orders agree on the prefix
            adj[t] = g.adj[t] & ((1 << t) - 1)
            for v in iter_bits(adj[t]):
                adj[v] |= 1 << t
            sub = Graph._trusted(t + 1, tuple(adj[: t + 1]))
            grown = out + [-1] * (sub.m - len(out))
            _apply_plan(sub, _plan(sub, t), grown)
            out = grown
    _check_good(g, out, 3, "built coloring")
    return out


# K_4 deletion ---------------------------------------------------------


def delete_k4_edges(g: Graph) -> Graph:
    """Remove every edge that lies in some K_4."""
    drop = set()
    for a, b, c, d in iter_cliques(g, 4):
        drop.update({(a, b), (a, c), (a, d), (b, c), (b, d), (c, d)})
    return make_graph(g.n, (e for e in g.edges if e not in drop))


def k4_locality_violations(g: Graph) -> list[str]:
    """Failures of the deletion locality property (empty when it holds).

    Checked: K_4s of ``g`` are pairwise edge-disjoint, and every triangle of
    ``g`` that loses an edge lies inside a single K_4 of ``g``.
    """
    k4s = list(iter_cliques(g, 4))
    problems = []
    owner: dict[tuple[int, int], int] = {}
    for idx, q in enumerate(k4s):
        for i in range(4):
            for j in range(i + 1, 4):
                e = (q[i], q[j])
                if e in owner:
                    problems.append(f"K4s {k4s[owner[e]]} and {q} share edge {e}")
                owner[e] = idx
    residue = delete_k4_edges(g)
    for tri in _triangles(g):
        a, b, c = tri
        if residue.has_edge(a, b) and residue.has_edge(a, c) and residue.has_edge(b, c):
            continue
        if not any(set(tri) <= set(q) for q in k4s):
            problems.append(f"deleted triangle {tri} is not inside a K4")
    return problems


def _k4_pattern(q: tuple[int, int, int, int]) -> dict[tuple[int, int], int]:
    a, b, c, d = q
    red = [(a, b), (b, c), (c, d), (a, d)]
    blue = [(a, c), (b, d)]
    return {**{e: RED for e in red}, **{e: BLUE for e in blue}}


def lift_k4_coloring(g: Graph, chi_prime: Sequence[int]) -> list[int]:
    """Extend a good coloring of ``delete_k4_edges(g)`` to ``g``.

    Every K_4 gets a red 4-cycle ``a-b-c-d-a`` and blue diagonals (vertices
    ascending).  Requires ``g`` to be free of K_4 plus a vertex joined to two
    of its vertices, which makes K_4s edge-disjoint.
    """
    if not is_free(g, khat(4, 2)):
        raise ExtensionError("graph contains KHAT(4,2)")
    residue = delete_k4_edges(g)
    _check_good(residue, chi_prime, 3, "chi_prime")
    out = [-1] * g.m
    for e, c in zip(residue.edges, chi_prime):
        out[g.edge_index[e]] = c
    for q in iter_cliques(g, 4):
        for e, c in _k4_pattern(q).items():
            out[g.edge_index[e]] = c
    _check_good(g, out, 3, "lifted coloring")
    return out


SUPPORTED_CLASSES = (J4_FREE, B3_FREE, K1P4_FREE)


def residue_class(g: Graph) -> GraphClass | None:
    """First supported class containing ``delete_k4_edges(g)``, if any."""
    residue = delete_k4_edges(g)
    return next((c for c in SUPPORTED_CLASSES if c.contains(residue)), None)


def k4_deletion_pipeline(g: Graph) -> list[int]:
    cls = residue_class(g)
    if cls is None:
        raise ExtensionError("K_4-deleted residue is in no supported class")
    return lift_k4_coloring(g, build_good_coloring(delete_k4_edges(g), cls))


# multicolor link ------------------------------------------------------


def partition_coloring(g: Graph, u: int, parts: Sequence[Iterable[int]], k: int) -> list[int]:
    """Two-color ``E(G)`` from a partition of ``V(G) - u`` into K_k-free parts.

    Blue: edges inside a part and edges with both ends in ``N(u)``.  Red:
    edges at ``u`` and all remaining cross-part edges.  With ``s = len(parts) + 1``
    there is no red K_s, and every blue K_k ``S`` has ``S + u`` inducing K_{k+1}.
    """
    if not 0 <= u < g.n:
        raise ExtensionError(f"vertex {u} out of range")
    masks = [mask_of(p) for p in parts]
    if not masks:
        raise ExtensionError("need at least one part")
    union = 0
    for m in masks:
        if m & union:
            raise ExtensionError("parts overlap")
        union |= m
    if union != g.vertex_mask & ~(1 << u):
        raise ExtensionError("parts must partition V(G) - u")
    for i, m in enumerate(masks):
        if has_clique(induced_subgraph(g, m), k):
            raise ExtensionError(f"part {i} contains K_{k}")
    part_of = {}
    for i, m in enumerate(masks):
        for v in iter_bits(m):
            part_of[v] = i
    nbrs = g.adj[u]
    out = []
    for a, b in g.edges:
        if u in (a, b):
            out.append(RED)
        elif part_of[a] == part_of[b] or (nbrs >> a & 1 and nbrs >> b & 1):
            out.append(BLUE)
        else:
            out.append(RED)
    problems = partition_coloring_violations(g, u, out, len(masks) + 1, k)
    if problems:
        raise AssertionError(f"coloring breaks its contract: {problems[0]}")
    return out


def partition_coloring_violations(g: Graph, u: int, colors: Sequence[int], s: int, k: int) -> list[str]:
    problems = []
    for q in monochromatic_cliques(g, colors, s, RED):
        problems.append(f"red K_{s} on {q}")
    for q in monochromatic_cliques(g, colors, k, BLUE):
        closed = mask_of(q) | (1 << u)
        if u in q or not all((g.adj[v] | (1 << v)) & closed == closed for v in iter_bits(closed)):
            problems.append(f"blue K_{k} on {q} without a K_{k + 1} through {u}")
    return problems


# names required by the public interface contract
extend_edge_coloring_thm2 = extend_edge_coloring_split
lift_coloring_lemma7 = lift_k4_coloring
lemma11_coloring = partition_coloring
