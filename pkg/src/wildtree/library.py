"""Precomputed 01e tree rows of ``Com(n)`` and sieving them per subgraph.

Rows are held column-friendly: ``ones`` is one uint64 mask per row and
``bubbles`` a zero-padded ``(N, n-1)`` uint64 matrix, so ``n`` is capped at
11 (55 positions).  ``columns[j]`` is the packed bit vector over row indices
of the rows having a 1 at position ``j + 1``; OR-ing the columns of a mask's
zero positions marks every row whose ones clash with the mask.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable

import numpy as np

from . import engine
from .bits import full, iter_bits, labels_of, mask_of
from .engine import EngineStats
from .errors import GraphError, LibraryError
from .graph import Graph, complete_label, mincuts_natural_order
from .rows import ERow

FORMAT_VERSION = "v1"
DEFAULT_BOUND = 9
HARD_BOUND = 11
_CHUNK = 1 << 16
_HEADER = re.compile(r"WILDTREE-LIB (\S+) n=(\d+) rows=(\d+) trees=(\d+) checksum=([0-9a-f]+)$")


@dataclass
class Library:
    n: int
    ones: np.ndarray
    bubbles: np.ndarray
    columns: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        self.ones = np.ascontiguousarray(self.ones, dtype=np.uint64)
        self.bubbles = np.ascontiguousarray(self.bubbles, dtype=np.uint64).reshape(len(self.ones), max(self.n - 1, 0))
        self.columns = compute_columns(self.ones, self.m)

    @property
    def m(self) -> int:
        return self.n * (self.n - 1) // 2

    def __len__(self) -> int:
        return len(self.ones)

    @cached_property
    def capacities(self) -> np.ndarray:
        sizes = np.bitwise_count(self.bubbles).astype(np.int64)
        sizes[sizes == 0] = 1
        return np.prod(sizes, axis=1)

    @property
    def tree_total(self) -> int:
        return int(sum(self.capacities))

    def row(self, i: int) -> ERow:
        ones = int(self.ones[i])
        bubbles = tuple(int(b) for b in self.bubbles[i] if b)
        covered = ones
        for b in bubbles:
            covered |= b
        return ERow(self.m, full(self.m) & ~covered, ones, 0, bubbles)

    @cached_property
    def rows(self) -> list[ERow]:
        return [self.row(i) for i in range(len(self))]

    def checksum(self) -> str:
        digest = hashlib.sha256()
        digest.update(f"{self.n}:{len(self)}".encode())
        digest.update(self.columns.tobytes())
        digest.update(self.bubbles.tobytes())
        return digest.hexdigest()[:16]


def compute_columns(ones: np.ndarray, m: int) -> np.ndarray:
    """Packed per-position bit vectors over row indices."""
    cols = np.zeros((m, (len(ones) + 7) // 8), dtype=np.uint8)
    for j in range(m):
        cols[j] = np.packbits(((ones >> np.uint64(j)) & np.uint64(1)).astype(bool), bitorder="little")
    return cols


def _check_bound(n: int, bound: int) -> None:
    if n < 2:
        raise ValueError(f"library needs n >= 2, got {n}")
    if n > min(bound, HARD_BOUND):
        raise ValueError(f"n={n} exceeds the library bound {min(bound, HARD_BOUND)} "
                         "(raise --bound, at most 11; memory and time grow like (n-1)!)")


def _from_raw_stream(n: int, raws: Iterable) -> Library:
    target = n - 1
    width = max(target, 0)
    one_chunks, bubble_chunks = [], []
    ones_buf: list[int] = []
    bub_buf: list[tuple[int, ...]] = []
    pad = (0,) * width

    def flush():
        if ones_buf:
            one_chunks.append(np.array(ones_buf, dtype=np.uint64))
            bubble_chunks.append(np.array(bub_buf, dtype=np.uint64).reshape(len(ones_buf), width))
            ones_buf.clear()
            bub_buf.clear()

    for _, ones, _, bubbles in raws:
        if ones.bit_count() + len(bubbles) != target:
            continue
        ones_buf.append(ones)
        bub_buf.append((bubbles + pad)[:width])
        if len(ones_buf) >= _CHUNK:
            flush()
    flush()
    if one_chunks:
        ones_arr = np.concatenate(one_chunks)
        bub_arr = np.concatenate(bubble_chunks)
    else:
        ones_arr = np.zeros(0, dtype=np.uint64)
        bub_arr = np.zeros((0, width), dtype=np.uint64)
    return Library(n, ones_arr, bub_arr)


def build_library(n: int, *, bound: int = DEFAULT_BOUND, jobs: int = 1,
                  stats: EngineStats | None = None) -> Library:
    """Tree rows of ``Com(n)`` from its mincuts in natural order, in emission order.

    With ``jobs > 1`` the rows are sorted by text form instead.
    """
    _check_bound(n, bound)
    cuts = mincuts_natural_order(n).edges
    root = (0, 0, full(n * (n - 1) // 2), ())
    if jobs > 1:
        raws = engine.run_parallel("e", root, cuts, jobs, stats)
        lib = _from_raw_stream(n, raws)
        order = sorted(range(len(lib)), key=lambda i: str(lib.row(i)))
        return Library(n, lib.ones[order], lib.bubbles[order])
    return _from_raw_stream(n, engine.run("e", [(root, 0)], cuts, stats=stats))


def _unpack(bits: np.ndarray, count: int) -> np.ndarray:
    return np.unpackbits(bits, count=count, bitorder="little").astype(bool)


def clash_vector(lib: Library, mask: int) -> np.ndarray:
    """Boolean per row: its ones meet the zeros of the 02-row of ``mask``."""
    acc = np.zeros(lib.columns.shape[1], dtype=np.uint8)
    for low in iter_bits(full(lib.m) & ~mask):
        np.bitwise_or(acc, lib.columns[low.bit_length() - 1], out=acc)
    return _unpack(acc, len(lib))


def relevant_rows(lib: Library, mask: int) -> list[int]:
    """0-based indices of rows whose ones avoid every position outside ``mask``."""
    return np.flatnonzero(~clash_vector(lib, mask)).tolist()


def intersect_row(r: ERow, mask: int) -> ERow | None:
    """``r ∩ r_E`` for the 02-row with twos ``mask``; None if a bubble is swallowed."""
    outside = full(r.m) & ~mask
    if r.ones & outside:
        raise ValueError("row ones clash with the mask zeros; filter with relevant_rows first")
    ones = r.ones
    bubbles = []
    for b in r.bubbles:
        kept = b & mask
        if not kept:
            return None
        if kept & (kept - 1):
            bubbles.append(kept)
        else:
            ones |= kept
    covered = ones
    for b in bubbles:
        covered |= b
    zeros = full(r.m) & ~covered
    return ERow(r.m, zeros, ones, r.twos & mask, tuple(bubbles))


@dataclass
class SieveResult:
    """Surviving intersections, in ``Com(N)`` labels, for one input graph."""

    graph: Graph
    n: int
    rows: list[ERow]
    count: int
    relevant: list[int]
    label_map: tuple[int, ...]

    @property
    def spanning(self) -> bool:
        return bool(self.rows)

    def graph_rows(self) -> list[ERow]:
        """The rows re-indexed by the input graph's own edge labels."""
        back = {c: j for j, c in enumerate(self.label_map, start=1) if j <= self.graph.m}

        def pull(mask: int) -> int:
            return mask_of(back[c] for c in labels_of(mask) if c in back)

        out = []
        for r in self.rows:
            ones = pull(r.ones)
            bubbles = tuple(pull(b) for b in r.bubbles)
            covered = ones
            for b in bubbles:
                covered |= b
            out.append(ERow(self.graph.m, self.graph.all_edges & ~covered, ones, 0, bubbles))
        return out

    def trees(self) -> list[int]:
        out = []
        for r in self.graph_rows():
            out.extend(r.minimal_sets())
        return out


def embed(lib_n: int, g: Graph) -> tuple[tuple[int, ...], int]:
    """Label map into ``Com(lib_n)`` plus the mask of all used positions.

    A graph on fewer vertices is padded with a pendant path
    ``g.n - g.n+1 - ... - lib_n``; those edges lie in every spanning tree.
    The returned map covers the graph's edges followed by the padding edges.
    """
    if g.n > lib_n:
        raise GraphError(f"graph has {g.n} vertices, library covers Com({lib_n})")
    labels = [complete_label(lib_n, u, v) for u, v in g.edges]
    labels += [complete_label(lib_n, v, v + 1) for v in range(g.n, lib_n)]
    return tuple(labels), mask_of(labels)


def sieve(lib: Library, g: Graph) -> SieveResult:
    """Spanning trees of ``g`` as intersections of library rows with its edge mask."""
    label_map, mask = embed(lib.n, g)
    relevant = np.flatnonzero(~clash_vector(lib, mask))
    ones = lib.ones[relevant]
    bubbles = lib.bubbles[relevant]
    kept = bubbles & np.uint64(mask)
    swallowed = ((bubbles != 0) & (kept == 0)).any(axis=1)
    survivors = np.flatnonzero(~swallowed)
    rows = []
    count = 0
    m = lib.m
    for k in survivors.tolist():
        o = int(ones[k])
        bs = []
        for b in kept[k].tolist():
            if not b:
                continue
            if b & (b - 1):
                bs.append(b)
            else:
                o |= b
        row = ERow(m, full(m) & ~(o | sum(bs)), o, 0, tuple(bs))
        rows.append(row)
        count += row.capacity
    return SieveResult(g, lib.n, rows, count, relevant.tolist(), label_map)


def format_row_line(r: ERow) -> str:
    groups = ";".join(",".join(map(str, labels_of(b))) for b in r.bubbles)
    return f"O:{','.join(map(str, labels_of(r.ones)))}|B:{groups}"


def save_library(lib: Library, destination: str | Path) -> None:
    path = Path(destination)
    with path.open("w") as fh:
        fh.write(f"WILDTREE-LIB {FORMAT_VERSION} n={lib.n} rows={len(lib)} "
                 f"trees={lib.tree_total} checksum={lib.checksum()}\n")
        for i in range(len(lib)):
            fh.write(format_row_line(lib.row(i)))
            fh.write("\n")


def _parse_labels(text: str, m: int, lineno: int) -> list[int]:
    if not text:
        return []
    try:
        labels = [int(t) for t in text.split(",")]
    except ValueError:
        raise LibraryError(f"line {lineno}: bad label list {text!r}") from None
    if any(not 1 <= j <= m for j in labels):
        raise LibraryError(f"line {lineno}: label outside 1..{m}")
    return labels


def load_library(source: str | Path) -> Library:
    """Read a library file, recompute its columns and verify the checksum."""
    path = Path(source)
    try:
        lines = path.read_text().splitlines()
    except OSError as exc:
        raise LibraryError(f"cannot read library {path}: {exc}") from None
    if not lines:
        raise LibraryError("empty library file")
    head = _HEADER.match(lines[0].strip())
    if not head:
        raise LibraryError("missing or malformed 'WILDTREE-LIB' header")
    version, n, count, trees, checksum = head.groups()
    if version != FORMAT_VERSION:
        raise LibraryError(f"library format {version} is not supported (expected {FORMAT_VERSION})")
    n, count, trees = int(n), int(count), int(trees)
    if not 2 <= n <= HARD_BOUND:
        raise LibraryError(f"library n={n} outside 2..{HARD_BOUND}")
    body = lines[1:]
    if len(body) != count:
        raise LibraryError(f"header announces {count} rows, file has {len(body)} (truncated?)")
    m = n * (n - 1) // 2
    width = n - 1
    ones = np.zeros(count, dtype=np.uint64)
    bubbles = np.zeros((count, width), dtype=np.uint64)
    for i, line in enumerate(body):
        lineno = i + 2
        if not line.startswith("O:") or "|B:" not in line:
            raise LibraryError(f"line {lineno}: expected 'O:...|B:...'")
        o_text, b_text = line[2:].split("|B:", 1)
        o = mask_of(_parse_labels(o_text, m, lineno))
        groups = [mask_of(_parse_labels(t, m, lineno)) for t in b_text.split(";")] if b_text else []
        if o.bit_count() + len(groups) != width:
            raise LibraryError(f"line {lineno}: not a tree row of Com({n})")
        seen = o
        for b in groups:
            if b & seen or not b & (b - 1):
                raise LibraryError(f"line {lineno}: overlapping or degenerate bubble")
            seen |= b
        ones[i] = o
        bubbles[i, :len(groups)] = groups
    lib = Library(n, ones, bubbles)
    if lib.checksum() != checksum:
        raise LibraryError(f"checksum mismatch: file says {checksum}, contents give {lib.checksum()}")
    if lib.tree_total != trees:
        raise LibraryError(f"header announces {trees} trees, rows hold {lib.tree_total}")
    return lib
