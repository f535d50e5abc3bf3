"""Streaming search for small H-free graphs that arrow a target list."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .arrowing import Indeterminate, Mode, arrows, make_instance
from .enumeration import enumerate_nonisomorphic, random_graphs
from .graph import Graph, emit_graph6, parse_graph6, read_graph6_lines
from .invariants import is_free


@dataclass(frozen=True)
class Graph6Source:
    path: str | None = None
    lines: tuple[str, ...] | None = None

    def graphs(self) -> Iterator[Graph]:
        if self.lines is not None:
            yield from read_graph6_lines(self.lines)
            return
        with open(self.path, encoding="ascii") as fh:
            yield from read_graph6_lines(fh)

    def describe(self) -> dict:
        return {"kind": "graph6", "path": self.path, "inline": None if self.lines is None else len(self.lines)}


@dataclass(frozen=True)
class ExhaustiveSource:
    n_max: int
    n_min: int = 1

    def graphs(self, avoid: Graph | None = None) -> Iterator[Graph]:
        pre = () if avoid is None else (avoid,)
        for n in range(self.n_min, self.n_max + 1):
            yield from enumerate_nonisomorphic(n, pre)

    def describe(self) -> dict:
        return {"kind": "exhaustive", "n_min": self.n_min, "n_max": self.n_max}


@dataclass(frozen=True)
class RandomSource:
    n: int
    p: float
    seed: int
    count: int

    def graphs(self) -> Iterator[Graph]:
        return random_graphs(self.n, self.p, self.seed, self.count)

    def describe(self) -> dict:
        return {"kind": "random", "n": self.n, "p": self.p, "seed": self.seed, "count": self.count}


@dataclass(frozen=True)
class SearchSpec:
    source: Graph6Source | ExhaustiveSource | RandomSource
    targets: tuple[Graph, ...]
    mode: Mode
    avoid: Graph | None = None
    node_limit: int | None = None


@dataclass
class BoundReport:
    params: dict
    best_g6: str | None = None
    best_order: int | None = None
    tested: int = 0
    filtered: int = 0
    arrows: int = 0
    fails: int = 0
    indeterminate: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "params": self.params,
            "best_g6": self.best_g6,
            "best_order": self.best_order,
            "tested": self.tested,
            "filtered": self.filtered,
            "arrows": self.arrows,
            "fails": self.fails,
            "indeterminate": list(self.indeterminate),
        }


def _decide(args: tuple[str, tuple[str, ...], str, int | None]) -> tuple[str, str]:
    g6, targets, mode, node_limit = args
    inst = make_instance(parse_graph6(g6), [parse_graph6(t) for t in targets], mode)
    try:
        return g6, arrows(inst, node_limit=node_limit).outcome.value
    except Indeterminate:
        return g6, "INDETERMINATE"


def _candidates(spec: SearchSpec, report: BoundReport) -> Iterator[str]:
    if isinstance(spec.source, ExhaustiveSource):
        # freeness is hereditary, so the enumerator prunes non-free graphs itself
        for g in spec.source.graphs(spec.avoid):
            yield emit_graph6(g)
        return
    for g in spec.source.graphs():
        if spec.avoid is not None and not is_free(g, spec.avoid):
            report.filtered += 1
            continue
        yield emit_graph6(g)


def search_upper_bound(spec: SearchSpec, jobs: int = 1) -> BoundReport:
    """Decide arrowing for every H-free candidate and keep the smallest ARROWS witness.

    Ties in order are broken by graph6 string, so the report does not
    depend on worker count.  INDETERMINATE candidates are listed, not dropped.
    """
    params = {
        "source": spec.source.describe(),
        "mode": Mode(spec.mode).value,
        "targets": [emit_graph6(t) for t in spec.targets],
        "avoid": None if spec.avoid is None else emit_graph6(spec.avoid),
        "node_limit": spec.node_limit,
    }
    report = BoundReport(params)
    target_g6 = tuple(emit_graph6(t) for t in spec.targets)
    mode = Mode(spec.mode).value
    work = ((g6, target_g6, mode, spec.node_limit) for g6 in _candidates(spec, report))
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            results: Iterable[tuple[str, str]] = list(pool.imap(_decide, work, chunksize=16))
    else:
        results = map(_decide, work)
    best: tuple[int, str] | None = None
    for g6, outcome in results:
        report.tested += 1
        if outcome == "ARROWS":
            report.arrows += 1
            key = (parse_graph6(g6).n, g6)
            if best is None or key < best:
                best = key
        elif outcome == "FAILS":
            report.fails += 1
        else:
            report.indeterminate.append(g6)
    if best is not None:
        report.best_order, report.best_g6 = best
    report.indeterminate.sort(key=lambda s: (parse_graph6(s).n, s))
    return report


def revalidate(report: BoundReport) -> bool:
    """Re-check the reported witness from its serialized form alone."""
    if report.best_g6 is None:
        return True
    p = report.params
    g = parse_graph6(report.best_g6)
    if g.n != report.best_order:
        return False
    if p["avoid"] is not None and not is_free(g, parse_graph6(p["avoid"])):
        return False
    inst = make_instance(g, [parse_graph6(t) for t in p["targets"]], p["mode"])
    return arrows(inst).arrows
