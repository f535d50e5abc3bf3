import itertools

import pytest

from folkman.enumeration import enumerate_nonisomorphic
from folkman.graph import Graph


def naive_contains(g: Graph, h: Graph) -> bool:
    """Subgraph test by trying every injective map."""
    for phi in itertools.permutations(range(g.n), h.n):
        if all(g.has_edge(phi[a], phi[b]) for a, b in h.edges):
            return True
    return False


def naive_clique_number(g: Graph) -> int:
    best = 0
    for k in range(1, g.n + 1):
        if any(all(g.has_edge(a, b) for a, b in itertools.combinations(s, 2))
               for s in itertools.combinations(range(g.n), k)):
            best = k
        else:
            break
    return best


def graphs_up_to(n_max: int):
    for n in range(1, n_max + 1):
        yield from enumerate_nonisomorphic(n)


@pytest.fixture(scope="session")
def small_graphs():
    return list(graphs_up_to(6))
