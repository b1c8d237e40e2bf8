"""Noncovers of a hypergraph as disjoint 012n-rows, and spanning trees from cycles."""

from __future__ import annotations

from . import engine
from .engine import EngineStats
from .graph import Graph, Hypergraph, enumerate_cycles, require_connected
from .rows import NRow
from .transversal import TreeRows, _raw, canonical_order, compress


def impose_noncover(r: NRow, c: int) -> list[NRow]:
    """Split ``r`` into disjoint rows covering exactly its members not containing ``c``."""
    if not c:
        raise ValueError("hyperedge must be nonempty")
    return [NRow(r.m, *kid) for kid in engine.impose_n(_raw(r), c)]


def compress_noncovers(h: Hypergraph, *, jobs: int = 1, minimize: bool = True,
                       skip_satisfied: bool = True, max_stack: int | None = None,
                       stats: EngineStats | None = None) -> list[NRow]:
    """All noncovers of ``h`` (sets containing no hyperedge) as disjoint 012n-rows."""
    raws = compress("n", h, jobs=jobs, minimize=minimize, skip_satisfied=skip_satisfied,
                    max_stack=max_stack, stats=stats)
    rows = [NRow(h.m, *r) for r in raws]
    return canonical_order(rows) if jobs > 1 else rows


def cycles_to_sptrees(g: Graph, *, max_cycles: int | None = None, jobs: int = 1,
                      max_stack: int | None = None, stats: EngineStats | None = None,
                      cycles: Hypergraph | None = None) -> TreeRows:
    """Spanning trees of ``g`` as the maximal independent sets of its cycle hypergraph.

    A final row holds trees iff its maximal sets have ``n - 1`` edges.
    """
    require_connected(g)
    if cycles is None:
        cycles = enumerate_cycles(g, limit=max_cycles)
    stats = stats or EngineStats()
    raws = compress("n", cycles, jobs=jobs, minimize=False, max_stack=max_stack, stats=stats)
    target = g.n - 1
    rows = []
    count = 0
    for zeros, ones, twos, bubbles in raws:
        if g.m - zeros.bit_count() - len(bubbles) != target:
            continue
        row = NRow(g.m, zeros, ones, twos, bubbles)
        rows.append(row)
        count += row.capacity
    if jobs > 1:
        rows = canonical_order(rows)
    return TreeRows(rows, count, len(raws), stats)
