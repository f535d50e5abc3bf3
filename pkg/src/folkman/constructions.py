"""Named graphs with fixed labelings.

Labeling conventions:

* ``K(n)``, ``C(n)``, ``P(n)``: vertices ``0..n-1``, cycle/path edges ``{i, i+1}``.
* ``STAR(k)``: center 0, leaves ``1..k``.
* ``J(n)``: ``K(n)`` without the edge ``{0, 1}``.
* ``BOOK(k)`` = ``K_1 + K_{1,k}``: apexes 0 and 1, pages ``2..k+1``.
* ``KHAT(n, s)``: ``K(n)`` on ``0..n-1`` plus vertex ``n`` adjacent to ``0..s-1``.
* ``WHEEL5`` = ``K_1 + C_4`` and ``K1_P4`` = ``K_1 + P_4``: hub 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .graph import Graph, GraphError, MAX_ORDER, complement, disjoint_union, join, make_graph


class Tag(str, Enum):
    K = "K"
    C = "C"
    P = "P"
    STAR = "STAR"
    J = "J"
    BOOK = "BOOK"
    WHEEL5 = "WHEEL5"
    KHAT = "KHAT"
    BULL = "BULL"
    BOWTIE = "BOWTIE"
    K1_P4 = "K1_P4"
    CO_P2P3 = "CO_P2P3"
    K14_PLUS_E = "K14_PLUS_E"
    THEOREM4 = "THEOREM4"
    CUBIC_RESIDUE = "CUBIC_RESIDUE"


_ARITY = {
    Tag.K: 1, Tag.C: 1, Tag.P: 1, Tag.STAR: 1, Tag.J: 1, Tag.BOOK: 1,
    Tag.KHAT: 2, Tag.CUBIC_RESIDUE: 1,
}


@dataclass(frozen=True)
class ConstructionId:
    name: Tag
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "name", Tag(self.name))
        object.__setattr__(self, "params", tuple(self.params))
        if len(self.params) != _ARITY.get(self.name, 0):
            raise GraphError(f"{self.name.value} takes {_ARITY.get(self.name, 0)} parameter(s)")


def complete(n: int) -> Graph:
    return make_graph(n, ((i, j) for j in range(n) for i in range(j)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    if n < 1:
        raise GraphError("a path needs at least 1 vertex")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def star(k: int) -> Graph:
    if k < 0:
        raise GraphError("star needs k >= 0")
    return make_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def j_graph(n: int) -> Graph:
    if n < 2:
        raise GraphError("J_n needs n >= 2")
    return make_graph(n, ((i, j) for j in range(n) for i in range(j) if (i, j) != (0, 1)))


def book(k: int) -> Graph:
    if k < 1:
        raise GraphError("B_k needs k >= 1")
    return join(complete(1), star(k))


def khat(n: int, s: int) -> Graph:
    if n < 1 or not 0 <= s <= n:
        raise GraphError("KHAT(n, s) needs n >= 1 and 0 <= s <= n")
    base = complete(n)
    return make_graph(n + 1, list(base.edges) + [(i, n) for i in range(s)])


def b3_free_arrowing_graph() -> Graph:
    """K_4-free, B_3-free graph on 19 vertices that arrows (3,3) on vertices.

    ``u = 0``; ``V_0 = {1, 2, 3}`` is a triangle; ``V_i`` (i = 1, 2, 3) is the
    5-cycle on ``4 + 5(i-1) .. 8 + 5(i-1)``.  ``u`` is adjacent to all of
    ``V_1 u V_2 u V_3`` and vertex ``i`` of ``V_0`` to all of ``V_i``.
    """
    edges = [(1, 2), (1, 3), (2, 3)]
    for i in (1, 2, 3):
        block = [4 + 5 * (i - 1) + t for t in range(5)]
        edges += [(block[t], block[(t + 1) % 5]) for t in range(5)]
        edges += [(0, v) for v in block]
        edges += [(i, v) for v in block]
    return make_graph(19, edges)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


# name required by the public interface contract
theorem4_graph = b3_free_arrowing_graph


def cubic_residues(p: int) -> frozenset[int]:
    return frozenset(pow(x, 3, p) for x in range(1, p))


@lru_cache(maxsize=None)
def cubic_residue_graph(p: int) -> Graph:
    """Difference graph on Z_p with the nonzero cubes as connection set."""
    if not _is_prime(p) or p % 3 != 1:
        raise GraphError(f"{p} is not a prime congruent to 1 mod 3")
    if p > MAX_ORDER:
        raise GraphError(f"p = {p} exceeds the order cap {MAX_ORDER}")
    d = cubic_residues(p)
    assert all((p - x) in d for x in d), "cubes mod p are closed under negation"
    return make_graph(p, [(a, b) for b in range(p) for a in range(b) if (b - a) % p in d])


def construct(cid: ConstructionId | Tag | str, *params: int) -> Graph:
    if not isinstance(cid, ConstructionId):
        cid = ConstructionId(Tag(cid), params)
    tag, args = cid.name, cid.params
    if tag is Tag.K:
        return complete(args[0])
    if tag is Tag.C:
        return cycle(args[0])
    if tag is Tag.P:
        return path(args[0])
    if tag is Tag.STAR:
        return star(args[0])
    if tag is Tag.J:
        return j_graph(args[0])
    if tag is Tag.BOOK:
        return book(args[0])
    if tag is Tag.KHAT:
        return khat(*args)
    if tag is Tag.WHEEL5:
        return join(complete(1), cycle(4))
    if tag is Tag.K1_P4:
        return join(complete(1), path(4))
    if tag is Tag.BOWTIE:
        return join(complete(1), disjoint_union(complete(2), complete(2)))
    if tag is Tag.BULL:
        return make_graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])
    if tag is Tag.CO_P2P3:
        return complement(disjoint_union(path(2), path(3)))
    if tag is Tag.K14_PLUS_E:
        return make_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)])
    if tag is Tag.THEOREM4:
        return b3_free_arrowing_graph()
    if tag is Tag.CUBIC_RESIDUE:
        return cubic_residue_graph(args[0])
    raise GraphError(f"unknown construction {tag}")


@lru_cache(maxsize=1)
def five_vertex_catalog() -> tuple[Graph, ...]:
    """Connected K_4-free graphs on 5 vertices containing K_3, one per isomorphism class."""
    from .enumeration import enumerate_nonisomorphic
    from .invariants import clique_number, is_connected

    return tuple(
        g for g in enumerate_nonisomorphic(5) if is_connected(g) and clique_number(g)[0] == 3
    )


NAMED_FIVE_VERTEX = {
    "B3": Tag.BOOK,
    "W5": Tag.WHEEL5,
    "CO_P2P3": Tag.CO_P2P3,
    "K1_P4": Tag.K1_P4,
    "BULL": Tag.BULL,
    "BOWTIE": Tag.BOWTIE,
    "K14_PLUS_E": Tag.K14_PLUS_E,
}


def named_five_vertex() -> dict[str, Graph]:
    return {
        name: construct(tag, 3) if tag is Tag.BOOK else construct(tag)
        for name, tag in NAMED_FIVE_VERTEX.items()
    }


def parse_target(text: str) -> Graph:
    """Parse a short graph name such as ``K3``, ``C5``, ``J4``, ``B3``, ``W5``, ``K1P4``,
    ``KHAT4,2`` (written ``KHAT4_2``), or ``g6:<graph6>``."""
    import re

    from .graph import parse_graph6

    s = text.strip()
    if s.startswith("g6:"):
        return parse_graph6(s[3:])
    fixed = {
        "W5": Tag.WHEEL5, "K1P4": Tag.K1_P4, "BULL": Tag.BULL, "BOWTIE": Tag.BOWTIE,
        "COP2P3": Tag.CO_P2P3, "K14E": Tag.K14_PLUS_E, "THEOREM4": Tag.THEOREM4,
    }
    key = s.upper().replace("_", "").replace("+", "")
    if key in fixed:
        return construct(fixed[key])
    m = re.fullmatch(r"KHAT(\d+)[_,](\d+)", s.upper())
    if m:
        return khat(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"(K|C|P|J|B|S|STAR|G)(\d+)", s.upper())
    if not m:
        raise GraphError(f"unrecognized graph name {text!r}")
    prefix, k = m.group(1), int(m.group(2))
    return {
        "K": complete, "C": cycle, "P": path, "J": j_graph, "B": book,
        "S": star, "STAR": star, "G": cubic_residue_graph,
    }[prefix](k)
