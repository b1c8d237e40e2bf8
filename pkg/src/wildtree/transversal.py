"""Transversals of a hypergraph as disjoint 012e-rows, and spanning trees from mincuts."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import factorial
from typing import Iterator, Sequence

from . import engine
from .bits import full
from .engine import EngineStats, Raw
from .graph import Graph, Hypergraph, complete_graph, enumerate_mincuts, mincuts_natural_order, require_connected, stars
from .rows import ERow, NRow


def _raw(r) -> Raw:
    return (r.zeros, r.ones, r.twos, r.bubbles)


def canonical_order(rows):
    return sorted(rows, key=lambda r: (r.m, str(r)))


def impose_transversal(r: ERow, h: int) -> list[ERow]:
    """Split ``r`` into disjoint rows covering exactly its members that meet ``h``."""
    if not h:
        raise ValueError("hyperedge must be nonempty")
    return [ERow(r.m, *kid) for kid in engine.impose_e(_raw(r), h)]


def compress(kind: str, h: Hypergraph, *, jobs: int = 1, minimize: bool = True,
             skip_satisfied: bool = True, max_stack: int | None = None,
             stats: EngineStats | None = None) -> list[Raw]:
    edges = engine.minimize_hyperedges(h.edges) if minimize else h.edges
    root: Raw = (0, 0, full(h.m), ())
    if jobs > 1:
        return engine.run_parallel(kind, root, edges, jobs, stats)
    return list(engine.run(kind, [(root, 0)], edges, skip_satisfied=skip_satisfied,
                           max_stack=max_stack, stats=stats))


def compress_transversals(h: Hypergraph, *, jobs: int = 1, minimize: bool = True,
                          skip_satisfied: bool = True, max_stack: int | None = None,
                          stats: EngineStats | None = None) -> list[ERow]:
    """All transversals of ``h`` as pairwise disjoint 012e-rows.

    With ``jobs == 1`` rows come in engine emission order; with more jobs
    they are sorted by their text form.
    """
    raws = compress("e", h, jobs=jobs, minimize=minimize, skip_satisfied=skip_satisfied,
                    max_stack=max_stack, stats=stats)
    rows = [ERow(h.m, *r) for r in raws]
    return canonical_order(rows) if jobs > 1 else rows


@dataclass
class TreeRows:
    """Spanning trees in compressed form.

    ``rows`` are 01e tree rows (trees = row-minimal sets) for the mincut
    pipelines and 012n tree rows (trees = row-maximal sets) for the cycle
    pipeline.  ``final_rows`` counts every final row the engine produced,
    tree rows or not.
    """

    rows: list
    count: int
    final_rows: int = 0
    stats: EngineStats = field(default_factory=EngineStats)

    def trees(self) -> Iterator[int]:
        for r in self.rows:
            yield from (r.minimal_sets() if isinstance(r, ERow) else r.maximal_sets())

    @property
    def max_capacity(self) -> int:
        return max((r.capacity for r in self.rows), default=0)


def tree_rows_from_cuts(g: Graph, cuts: Sequence[int], **kwargs) -> TreeRows:
    stats = kwargs.pop("stats", None) or EngineStats()
    jobs = kwargs.get("jobs", 1)
    raws = compress("e", Hypergraph(g.m, tuple(cuts)), minimize=False, stats=stats, **kwargs)
    target = g.n - 1
    rows = []
    count = 0
    for zeros, ones, twos, bubbles in raws:
        if ones.bit_count() + len(bubbles) != target:
            continue
        row = ERow(g.m, zeros | twos, ones, 0, bubbles)
        rows.append(row)
        count += row.capacity
    if jobs > 1:
        rows = canonical_order(rows)
    return TreeRows(rows, count, len(raws), stats)


def mcuts_to_sptrees(g: Graph, **kwargs) -> TreeRows:
    """Spanning trees of ``g`` by imposing all of its mincuts."""
    require_connected(g)
    if g.n == 1:
        return TreeRows([ERow(g.m, zeros=g.all_edges)], 1, 1)
    return tree_rows_from_cuts(g, enumerate_mincuts(g).edges, **kwargs)


@dataclass
class ConjectureReport:
    n: int
    rows: int
    tree_rows: int
    tree_total: int
    max_capacity: int
    ordering: str = "natural"

    @property
    def factorial(self) -> int:
        return factorial(self.n - 1)

    @property
    def all_tree_rows(self) -> bool:
        return self.rows == self.tree_rows

    @property
    def rows_equal_factorial(self) -> bool:
        return self.rows == self.factorial

    @property
    def capacity_equals_factorial(self) -> bool:
        return self.max_capacity == self.factorial

    @property
    def cayley(self) -> int:
        return self.n ** (self.n - 2)

    def lines(self) -> list[str]:
        f = self.factorial
        return [
            f"n={self.n} ordering={self.ordering}",
            f"rows={self.rows} (n-1)!={f} equal={'yes' if self.rows_equal_factorial else 'no'}",
            f"tree_rows={self.tree_rows} all_tree_rows={'yes' if self.all_tree_rows else 'no'}",
            f"max_capacity={self.max_capacity} equals_(n-1)!={'yes' if self.capacity_equals_factorial else 'no'}",
            f"trees={self.tree_total} n^(n-2)={self.cayley} equal={'yes' if self.tree_total == self.cayley else 'no'}",
        ]


def check_conjectures(n: int, order: Sequence[int] | None = None, *, seed: int | None = None,
                      bound: int = 10) -> ConjectureReport:
    """Observe row count, tree-row share and max capacity for ``Com(n)``.

    ``order`` permutes the natural mincut order by index; ``seed`` draws a
    random permutation instead.  Nothing is asserted, only measured.
    """
    if not 2 <= n <= bound:
        raise ValueError(f"n must lie in 2..{bound}, got {n}")
    cuts = list(mincuts_natural_order(n).edges)
    label = "natural"
    if seed is not None:
        order = list(range(len(cuts)))
        random.Random(seed).shuffle(order)
        label = f"random(seed={seed})"
    elif order is not None:
        label = "custom"
    if order is not None:
        if sorted(order) != list(range(len(cuts))):
            raise ValueError("order must be a permutation of the mincut indices")
        cuts = [cuts[i] for i in order]
    result = tree_rows_from_cuts(complete_graph(n), cuts)
    return ConjectureReport(n, result.final_rows, len(result.rows), result.count,
                            result.max_capacity, label)


@dataclass
class Compressed:
    rows: list
    count: int


def edge_covers(g: Graph) -> Compressed:
    """Edge sets leaving no vertex isolated, as disjoint 012e-rows."""
    rows = compress_transversals(stars(g))
    return Compressed(rows, sum(r.cardinality for r in rows))


def as_nrow(r: ERow) -> NRow:
    """Complement image of an e-row (``x -> E \\ x``) as an n-row."""
    return NRow(r.m, r.ones, r.zeros, r.twos, r.bubbles)
