import pytest

from folkman import constructions as cons
from folkman.arrowing import Mode
from folkman.graph import emit_graph6
from folkman.invariants import are_isomorphic
from folkman.search import (
    BoundReport,
    ExhaustiveSource,
    Graph6Source,
    RandomSource,
    SearchSpec,
    revalidate,
    search_upper_bound,
)

K2, K3 = cons.complete(2), cons.complete(3)


def test_smallest_triangle_free_vertex_arrower_is_c5():
    report = search_upper_bound(SearchSpec(ExhaustiveSource(5), (K2, K2), Mode.VERTEX, avoid=K3))
    assert report.best_order == 5
    assert are_isomorphic(cons.parse_target("g6:" + report.best_g6), cons.cycle(5))
    assert report.indeterminate == []
    assert revalidate(report)


def test_smallest_b5_free_edge_arrower_is_k6():
    report = search_upper_bound(SearchSpec(ExhaustiveSource(6), (K3, K3), Mode.EDGE, avoid=cons.book(5)))
    assert report.best_order == 6
    assert report.best_g6 == emit_graph6(cons.complete(6))
    assert report.arrows == 1
    assert revalidate(report)


def test_file_source_accepts_b3_free_witness():
    g6 = emit_graph6(cons.b3_free_arrowing_graph())
    lines = (emit_graph6(cons.cycle(5)), g6)
    report = search_upper_bound(SearchSpec(Graph6Source(lines=lines), (K3, K3), Mode.VERTEX, avoid=cons.book(3)))
    assert (report.best_order, report.best_g6) == (19, g6)
    assert report.tested == 2 and report.fails == 1
    assert revalidate(report)


def test_file_source_from_disk(tmp_path):
    path = tmp_path / "in.g6"
    path.write_text(">>graph6<<" + emit_graph6(cons.complete(6)) + "\n" + emit_graph6(cons.complete(7)) + "\n")
    report = search_upper_bound(SearchSpec(Graph6Source(path=str(path)), (K3, K3), Mode.EDGE, avoid=cons.book(5)))
    assert report.filtered == 1 and report.tested == 1 and report.best_order == 6


def test_missing_file_raises():
    with pytest.raises(OSError):
        search_upper_bound(SearchSpec(Graph6Source(path="/nonexistent/x.g6"), (K3, K3), Mode.EDGE))


def test_indeterminate_candidates_are_reported():
    g6 = emit_graph6(cons.b3_free_arrowing_graph())
    spec = SearchSpec(Graph6Source(lines=(g6,)), (K3, K3), Mode.VERTEX, node_limit=1)
    report = search_upper_bound(spec)
    assert report.indeterminate == [g6] and report.best_g6 is None


def test_random_source_is_seeded():
    spec = SearchSpec(RandomSource(7, 0.6, seed=1, count=30), (K3, K3), Mode.VERTEX, avoid=cons.complete(4))
    a, b = search_upper_bound(spec), search_upper_bound(spec)
    assert a.as_dict() == b.as_dict()
    assert a.params["source"]["seed"] == 1
    assert a.tested + a.filtered == 30


def test_parallel_matches_serial():
    spec = SearchSpec(ExhaustiveSource(7, 5), (K3, K3), Mode.VERTEX, avoid=cons.complete(4))
    assert search_upper_bound(spec, jobs=2).as_dict() == search_upper_bound(spec, jobs=1).as_dict()


def test_revalidate_detects_tampering():
    report = search_upper_bound(SearchSpec(ExhaustiveSource(5), (K2, K2), Mode.VERTEX, avoid=K3))
    forged = BoundReport(report.params, best_g6=emit_graph6(cons.cycle(4)), best_order=4)
    assert not revalidate(forged)
    forged = BoundReport(report.params, best_g6=emit_graph6(K3), best_order=3)
    assert not revalidate(forged)
