import itertools
import random

import pytest

from conftest import graphs_up_to, naive_clique_number, naive_contains
from folkman import constructions as cons
from folkman.arrowing import Mode, arrows, make_instance
from folkman.enumeration import enumerate_nonisomorphic, random_graph
from folkman.graph import GraphError, complement, disjoint_union, iter_bits, make_graph
from folkman.invariants import (
    BudgetExceeded,
    ComponentTag,
    are_isomorphic,
    chromatic_number,
    classify_components,
    clique_number,
    contains_subgraph,
    independence_number,
    is_bipartite,
    is_free,
    is_proper_coloring,
    is_valid_embedding,
    iter_embeddings,
)


def test_contains_matches_naive_oracle_exhaustively():
    hosts = list(graphs_up_to(6))
    patterns = list(graphs_up_to(4))
    for g in hosts:
        for h in patterns:
            phi = contains_subgraph(g, h)
            assert (phi is not None) == naive_contains(g, h), (g, h)
            if phi is not None:
                assert is_valid_embedding(g, h, phi)


def test_contains_matches_naive_oracle_sampled_larger():
    rng = random.Random(7)
    patterns = list(enumerate_nonisomorphic(5))
    for _ in range(150):
        g = random_graph(rng.choice([7, 8]), rng.uniform(0.3, 0.8), rng)
        h = rng.choice(patterns)
        assert (contains_subgraph(g, h) is not None) == naive_contains(g, h)


def test_embeddings_are_listed_once_per_copy():
    # twin vertices of the pattern are not permuted, so each copy appears once
    assert len(list(iter_embeddings(cons.complete(4), cons.complete(3)))) == 4
    assert len(list(iter_embeddings(cons.complete(5), cons.path(3)))) == 30
    assert len(list(iter_embeddings(cons.cycle(5), cons.path(3)))) == 5


def test_free_examples():
    assert is_free(cons.cycle(5), cons.complete(3))
    assert not is_free(cons.complete(6), cons.complete(3))
    assert is_free(cons.complete(6), cons.book(5))
    assert not is_free(cons.complete(7), cons.book(5))


def test_isomorphism():
    assert are_isomorphic(cons.cycle(5), complement(cons.cycle(5)))
    assert not are_isomorphic(cons.path(4), cons.star(3))


def test_clique_number_matches_naive():
    for g in graphs_up_to(7):
        w, clique = clique_number(g)
        assert w == naive_clique_number(g)
        assert len(clique) == w
        assert all(g.has_edge(a, b) for a, b in itertools.combinations(clique, 2))


def test_independence_is_clique_of_complement():
    for g in enumerate_nonisomorphic(8):
        a, witness = independence_number(g)
        assert a == clique_number(complement(g))[0]
        assert not any(g.has_edge(x, y) for x, y in itertools.combinations(witness, 2))


def test_clique_examples():
    assert clique_number(cons.b3_free_arrowing_graph())[0] == 3
    assert independence_number(cons.cycle(5))[0] == 2
    assert clique_number(make_graph(0))[0] == 0


def _naive_chromatic(g):
    for k in range(0 if g.n == 0 else 1, g.n + 1):
        for col in itertools.product(range(k), repeat=g.n):
            if all(col[a] != col[b] for a, b in g.edges):
                return k
    return g.n


def test_chromatic_matches_naive():
    for g in graphs_up_to(6):
        k, col = chromatic_number(g)
        assert k == _naive_chromatic(g)
        assert is_proper_coloring(g, col) and len(set(col)) <= k


def test_chromatic_examples():
    assert chromatic_number(cons.cycle(5))[0] == 3
    assert chromatic_number(cons.complete(6))[0] == 6
    # it arrows (K_3, K_3) on vertices, so two bipartite halves cannot cover it
    assert chromatic_number(cons.b3_free_arrowing_graph())[0] == 5


def test_chromatic_budget():
    with pytest.raises((BudgetExceeded, GraphError)):
        chromatic_number(make_graph(65))


@pytest.mark.parametrize("r", [2, 3])
def test_chromatic_number_agrees_with_vertex_arrowing_of_edges(r):
    k2 = cons.complete(2)
    for g in graphs_up_to(7):
        if g.n < 2:
            continue
        verdict = arrows(make_instance(g, [k2] * r, Mode.VERTEX))
        assert verdict.arrows == (chromatic_number(g)[0] > r)


def test_bipartite():
    a, b = is_bipartite(cons.cycle(6))
    assert a | b == 0b111111 and a & b == 0
    assert is_bipartite(cons.cycle(5)) is None
    assert is_bipartite(make_graph(3)) is not None


def test_classify_components():
    g = disjoint_union(disjoint_union(cons.path(3), cons.complete(3)), cons.cycle(5))
    tags = sorted(c.tag.value for c in classify_components(g))
    assert tags == sorted([ComponentTag.BIPARTITE.value, ComponentTag.TRIANGLE.value, ComponentTag.ODD_CYCLE.value])
    other = classify_components(cons.complete(4))
    assert [c.tag for c in other] == [ComponentTag.OTHER]


def test_classify_components_within_mask():
    g = cons.b3_free_arrowing_graph()
    comps = classify_components(g, g.adj[0])
    assert sorted(c.tag for c in comps) == [ComponentTag.ODD_CYCLE] * 3
    assert sum(c.vertices.bit_count() for c in comps) == 15
    for c in comps:
        assert all(v >= 4 for v in iter_bits(c.vertices))


def test_g127_independent_set_witness():
    g = cons.cubic_residue_graph(127)
    alpha, witness = independence_number(g)
    assert alpha == 11
    assert not any(g.has_edge(a, b) for a, b in itertools.combinations(witness, 2))
