import pytest

from folkman import constructions as cons
from folkman.constructions import ConstructionId, Tag, construct
from folkman.graph import GraphError, complement, disjoint_union, make_graph
from folkman.invariants import are_isomorphic, clique_number, contains_subgraph, is_connected, is_free


def test_book_identities():
    assert are_isomorphic(cons.book(1), cons.complete(3))
    assert are_isomorphic(cons.book(2), cons.j_graph(4))
    # B_3 is K_5 with the edges of one triangle removed
    k5_minus_k3 = complement(disjoint_union(cons.complete(3), make_graph(2)))
    assert are_isomorphic(cons.book(3), k5_minus_k3)


@pytest.mark.parametrize("k", range(1, 8))
def test_book_shape(k):
    b = cons.book(k)
    assert (b.n, b.m) == (k + 2, 2 * k + 1)
    assert b.has_edge(0, 1)
    assert all(b.has_edge(0, v) and b.has_edge(1, v) for v in range(2, k + 2))


def test_khat_identities():
    assert are_isomorphic(cons.khat(4, 4), cons.complete(5))
    assert are_isomorphic(cons.khat(4, 3), cons.j_graph(5))
    assert cons.khat(4, 0).m == 6


def test_j_graph_omits_first_edge():
    j = cons.j_graph(4)
    assert j.m == 5 and not j.has_edge(0, 1)
    assert are_isomorphic(cons.j_graph(3), cons.path(3))


def test_small_families():
    assert cons.cycle(5).degrees() == [2] * 5
    assert cons.path(4).m == 3
    assert cons.star(4).degree(0) == 4


@pytest.mark.parametrize(
    "tag,params",
    [(Tag.J, (1,)), (Tag.BOOK, (0,)), (Tag.KHAT, (4, 5)), (Tag.KHAT, (4,)), (Tag.C, (2,)), (Tag.THEOREM4, (1,))],
)
def test_construct_rejects_bad_params(tag, params):
    with pytest.raises((GraphError, ValueError)):
        construct(ConstructionId(tag, params))


def test_b3_free_arrowing_graph_structure():
    g = cons.b3_free_arrowing_graph()
    assert (g.n, g.m) == (19, 48)
    assert g.degree(0) == 15
    assert [g.degree(i) for i in (1, 2, 3)] == [7, 7, 7]
    assert clique_number(g)[0] == 3
    assert is_free(g, cons.book(3))
    for i in range(3):
        block = range(4 + 5 * i, 9 + 5 * i)
        assert all(g.has_edge(1 + i, v) for v in block)
    assert cons.theorem4_graph() == g


def test_cubic_residue_graph_127():
    g = cons.cubic_residue_graph(127)
    assert g.n == 127
    assert set(g.degrees()) == {42}
    residues = cons.cubic_residues(127)
    assert len(residues) == 42 and all((-x) % 127 in residues for x in residues)
    # circulant: neighborhoods are rotations of each other
    assert all(g.has_edge(3, (3 + d) % 127) for d in residues)


@pytest.mark.parametrize("p", [11, 15, 121])
def test_cubic_residue_graph_rejects_bad_moduli(p):
    with pytest.raises(GraphError):
        cons.cubic_residue_graph(p)


def test_small_cubic_residue_graph():
    g = cons.cubic_residue_graph(7)
    assert set(g.degrees()) == {2}
    assert cons.cubic_residues(7) == frozenset({1, 6})


def test_five_vertex_catalog():
    cat = cons.five_vertex_catalog()
    assert len(cat) == 11
    assert all(g.n == 5 and is_connected(g) and clique_number(g)[0] == 3 for g in cat)
    assert all(not are_isomorphic(a, b) for i, a in enumerate(cat) for b in cat[i + 1:])
    for name, h in cons.named_five_vertex().items():
        assert any(are_isomorphic(h, g) for g in cat), name


def test_catalog_members_inside_k1p4():
    k1p4 = cons.named_five_vertex()["K1_P4"]
    inside = [g for g in cons.five_vertex_catalog() if contains_subgraph(k1p4, g) is not None]
    assert len(inside) == 8


@pytest.mark.parametrize(
    "text,n,m",
    [("K3", 3, 3), ("C5", 5, 5), ("J4", 4, 5), ("B3", 5, 7), ("W5", 5, 8), ("K1P4", 5, 7), ("g6:Bw", 3, 3)],
)
def test_parse_target(text, n, m):
    g = cons.parse_target(text)
    assert (g.n, g.m) == (n, m)


def test_parse_target_unknown():
    with pytest.raises(GraphError):
        cons.parse_target("Q7")
