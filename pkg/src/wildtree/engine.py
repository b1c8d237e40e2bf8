"""LIFO imposition engine shared by the transversal and noncover algorithms.

Rows travel through the engine as raw tuples ``(zeros, ones, twos, bubbles)``
of int masks; :class:`~wildtree.rows.ERow`/:class:`~wildtree.rows.NRow`
objects are only built for the caller.  A work item is a raw row plus the
index of the first hyperedge not yet imposed on it.

Both impositions split a row by the position group that is the *first
supplier* of the required bit: groups are the bubbles meeting the
hyperedge (in bubble order) followed by the free positions meeting it.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import LimitExceeded

Raw = tuple[int, int, int, tuple[int, ...]]
Impose = Callable[[Raw, int], list]


def impose_e(row: Raw, h: int) -> list[Raw]:
    """Children of ``row`` whose members meet ``h``; disjoint, in emission order."""
    zeros, ones, twos, bubbles = row
    if h & ones:
        return [row]
    for b in bubbles:
        if not b & ~h:
            return [row]
    live = h & ~zeros
    kids = []
    cur_zeros, cur_ones = zeros, ones
    cur = list(bubbles)
    for i, b in enumerate(bubbles):
        part = b & live
        if not part:
            continue
        # child: this bubble supplies the first 1 of h
        nb = cur.copy()
        o = cur_ones
        if part & (part - 1):
            nb[i] = part
        else:
            nb[i] = 0
            o |= part
        kids.append((cur_zeros, o, twos | (b & ~part), tuple(x for x in nb if x)))
        # later children: this bubble's share of h is all 0
        rest = b & ~part
        if not rest:
            return kids
        cur_zeros |= part
        if rest & (rest - 1):
            cur[i] = rest
        else:
            cur[i] = 0
            cur_ones |= rest
    free = live & twos
    if free:
        nb = [x for x in cur if x]
        o = cur_ones
        if free & (free - 1):
            nb.append(free)
        else:
            o |= free
        kids.append((cur_zeros, o, twos & ~free, tuple(nb)))
    return kids


def impose_n(row: Raw, c: int) -> list[Raw]:
    """Children of ``row`` whose members do not contain ``c``."""
    zeros, ones, twos, bubbles = row
    if c & zeros:
        return [row]
    for b in bubbles:
        if not b & ~c:
            return [row]
    live = c & ~ones
    kids = []
    cur_zeros, cur_ones = zeros, ones
    cur = list(bubbles)
    for i, b in enumerate(bubbles):
        part = b & live
        if not part:
            continue
        nb = cur.copy()
        z = cur_zeros
        if part & (part - 1):
            nb[i] = part
        else:
            nb[i] = 0
            z |= part
        kids.append((z, cur_ones, twos | (b & ~part), tuple(x for x in nb if x)))
        rest = b & ~part
        if not rest:
            return kids
        cur_ones |= part
        if rest & (rest - 1):
            cur[i] = rest
        else:
            cur[i] = 0
            cur_zeros |= rest
    free = live & twos
    if free:
        nb = [x for x in cur if x]
        z = cur_zeros
        if free & (free - 1):
            nb.append(free)
        else:
            z |= free
        kids.append((z, cur_ones, twos & ~free, tuple(nb)))
    return kids


IMPOSE = {"e": impose_e, "n": impose_n}
# slot of the raw tuple whose overlap with a hyperedge satisfies it outright
QUICK_SLOT = {"e": 1, "n": 0}


@dataclass
class EngineStats:
    """Progress counters exposed to the CLI."""

    impositions: int = 0
    finalized: int = 0
    dead: int = 0
    max_stack: int = 0


def minimize_hyperedges(edges: Sequence[int]) -> tuple[int, ...]:
    """Drop duplicates and proper supersets, keeping input order."""
    by_size = sorted(set(edges), key=int.bit_count)
    keep = set()
    kept: list[int] = []
    for h in by_size:
        if not any(k & h == k for k in kept):
            kept.append(h)
            keep.add(h)
    out = []
    for h in edges:
        if h in keep:
            out.append(h)
            keep.discard(h)
    return tuple(out)


def run(kind: str, items: Iterable[tuple[Raw, int]], edges: Sequence[int], *,
        skip_satisfied: bool = True, max_stack: int | None = None,
        stats: EngineStats | None = None) -> Iterator[Raw]:
    """Drain a LIFO stack of work items and yield final rows.

    Children are pushed in reverse emission order, so they are popped in
    emission order.  Satisfied hyperedges are skipped without an imposition.
    """
    impose = IMPOSE[kind]
    slot = QUICK_SLOT[kind]
    edges = tuple(edges)
    h = len(edges)
    if stats is None:
        stats = EngineStats()
    stack = list(items)
    stack.reverse()
    while stack:
        row, i = stack.pop()
        while True:
            if skip_satisfied:
                hit = row[slot]
                while i < h and edges[i] & hit:
                    i += 1
            if i == h:
                stats.finalized += 1
                yield row
                break
            kids = impose(row, edges[i])
            stats.impositions += 1
            i += 1
            if not kids:
                stats.dead += 1
                break
            row = kids[0]
            for kid in reversed(kids[1:]):
                stack.append((kid, i))
            if len(stack) > stats.max_stack:
                stats.max_stack = len(stack)
                if max_stack is not None and len(stack) > max_stack:
                    raise LimitExceeded(f"work stack exceeded {max_stack} rows")


def _expand(kind: str, root: Raw, edges: tuple[int, ...], target: int,
            stats: EngineStats) -> tuple[list[Raw], list[tuple[Raw, int]]]:
    # breadth-first split until there are enough independent work items
    impose = IMPOSE[kind]
    slot = QUICK_SLOT[kind]
    h = len(edges)
    final: list[Raw] = []
    frontier = [(root, 0)]
    while frontier and len(frontier) < target:
        nxt = []
        for row, i in frontier:
            while i < h and edges[i] & row[slot]:
                i += 1
            if i == h:
                final.append(row)
                continue
            stats.impositions += 1
            nxt.extend((kid, i + 1) for kid in impose(row, edges[i]))
        frontier = nxt
    return final, frontier


def _worker(args) -> tuple[list[Raw], EngineStats]:
    kind, items, edges = args
    stats = EngineStats()
    return list(run(kind, items, edges, stats=stats)), stats


def run_parallel(kind: str, root: Raw, edges: Sequence[int], jobs: int,
                 stats: EngineStats | None = None) -> list[Raw]:
    """Shard the stack over ``jobs`` processes; result order is unspecified."""
    edges = tuple(edges)
    stats = stats if stats is not None else EngineStats()
    final, frontier = _expand(kind, root, edges, 8 * jobs, stats)
    shards = [frontier[k::jobs] for k in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for rows, sub in pool.map(_worker, [(kind, s, edges) for s in shards if s]):
            final.extend(rows)
            stats.impositions += sub.impositions
            stats.dead += sub.dead
            stats.max_stack = max(stats.max_stack, sub.max_stack)
    stats.finalized = len(final)
    return final
