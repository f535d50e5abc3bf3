import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from folkman import constructions as cons
from folkman.enumeration import (
    canonical_form,
    canonical_graph,
    enumerate_nonisomorphic,
    random_graph,
    random_graphs,
)
from folkman.graph import GraphError, make_graph
from folkman.invariants import are_isomorphic, is_free


def _brute_force_classes(n):
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for bits in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if bits >> i & 1]
        key = min(
            tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
            for perm in itertools.permutations(range(n))
        )
        seen.add(key)
    return len(seen)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)])
def test_counts(n, count):
    assert sum(1 for _ in enumerate_nonisomorphic(n)) == count


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_counts_match_brute_force_dedup(n):
    assert sum(1 for _ in enumerate_nonisomorphic(n)) == _brute_force_classes(n)


def test_enumerated_graphs_are_pairwise_nonisomorphic():
    gs = list(enumerate_nonisomorphic(5))
    for i, a in enumerate(gs):
        for b in gs[i + 1:]:
            assert not are_isomorphic(a, b)


@pytest.mark.parametrize("h", [cons.complete(3), cons.book(3), cons.j_graph(4), cons.path(4)])
def test_pruned_enumeration_equals_filtered(h):
    for n in range(1, 8):
        pruned = {canonical_form(g) for g in enumerate_nonisomorphic(n, [h])}
        filtered = {canonical_form(g) for g in enumerate_nonisomorphic(n) if is_free(g, h)}
        assert pruned == filtered


def test_triangle_free_counts():
    # triangle-free graphs on 1..7 vertices
    counts = [sum(1 for _ in enumerate_nonisomorphic(n, [cons.complete(3)])) for n in range(1, 8)]
    assert counts == [1, 2, 3, 7, 14, 38, 107]


def test_order_budget():
    with pytest.raises(GraphError):
        next(enumerate_nonisomorphic(10))


@settings(max_examples=150)
@given(st.integers(1, 8), st.integers(0, 2**28 - 1), st.randoms(use_true_random=False))
def test_canonical_form_is_label_invariant(n, bits, rnd):
    pairs = list(itertools.combinations(range(n), 2))
    g = make_graph(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
    perm = list(range(n))
    rnd.shuffle(perm)
    h = make_graph(n, [(perm[a], perm[b]) for a, b in g.edges])
    assert canonical_form(g) == canonical_form(h)
    assert are_isomorphic(canonical_graph(g), g)


def test_canonical_form_separates_classes():
    forms = [canonical_form(g) for g in enumerate_nonisomorphic(6)]
    assert len(set(forms)) == len(forms)


def test_random_graphs_are_seed_deterministic():
    a = [g.adj for g in random_graphs(9, 0.4, seed=3, count=5)]
    b = [g.adj for g in random_graphs(9, 0.4, seed=3, count=5)]
    c = [g.adj for g in random_graphs(9, 0.4, seed=4, count=5)]
    assert a == b and a != c
    assert random_graph(6, 1.0, random.Random(0)).m == 15
