"""Labeled simple graphs and the three constraint hypergraphs built from them.

Vertices are ``1..n``; the edge with list position ``i`` (0-based) carries
label ``i + 1`` and occupies bit ``i`` of every edge mask.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .bits import format_labels, labels_of
from .errors import DisconnectedGraphError, GraphError, GraphFormatError, LimitExceeded


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"vertex count must be >= 1, got {self.n}")
        seen = set()
        normalized = []
        for label, (u, v) in enumerate(self.edges, start=1):
            if u == v:
                raise GraphError(f"edge {label} is a self-loop at v{u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"edge {label} = {{{u},{v}}} has an endpoint outside 1..{self.n}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"edge {label} = {{{u},{v}}} duplicates an earlier edge")
            seen.add(key)
            normalized.append(key)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_edges(self) -> int:
        return (1 << self.m) - 1

    def star_masks(self) -> list[int]:
        """Incident-edge mask per vertex, index 0 for ``v1``."""
        stars = [0] * self.n
        for i, (u, v) in enumerate(self.edges):
            stars[u - 1] |= 1 << i
            stars[v - 1] |= 1 << i
        return stars

    def adjacency(self) -> list[int]:
        """Neighbour bitmask (bit ``k`` = vertex ``k + 1``) per vertex."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return adj

    def edges_of(self, mask: int) -> list[tuple[int, int]]:
        return [self.edges[j - 1] for j in labels_of(mask)]


@dataclass(frozen=True)
class Hypergraph:
    """Ordered list of nonempty edge masks over the ground set ``1..m``.

    The order is the order in which the engines impose the hyperedges.
    """

    m: int
    edges: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        limit = 1 << self.m
        for i, h in enumerate(self.edges):
            if h <= 0:
                raise GraphError(f"hyperedge {i + 1} is empty")
            if h >= limit:
                raise GraphError(f"hyperedge {i + 1} exceeds ground set 1..{self.m}")

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[int]:
        return iter(self.edges)

    def __getitem__(self, i):
        return self.edges[i]

    def as_labels(self) -> list[list[int]]:
        return [labels_of(h) for h in self.edges]

    @classmethod
    def from_labels(cls, m: int, sets: Iterable[Iterable[int]]) -> "Hypergraph":
        from .bits import mask_of

        return cls(m, tuple(mask_of(s) for s in sets))


def complete_graph(n: int) -> Graph:
    """``Com(n)`` with edges labeled in lexicographic order of ``(i, j)``."""
    if n < 2:
        raise GraphError(f"complete graph needs n >= 2, got {n}")
    return Graph(n, tuple(itertools.combinations(range(1, n + 1), 2)))


def complete_label(n: int, u: int, v: int) -> int:
    """Lexicographic label of ``{u, v}`` in ``Com(n)``."""
    if u > v:
        u, v = v, u
    if not (1 <= u < v <= n):
        raise GraphError(f"{{{u},{v}}} is not an edge of Com({n})")
    return (u - 1) * n - (u - 1) * u // 2 + (v - u)


def _spans(adj: list[int], vertices: int) -> bool:
    # vertices: bitmask; True iff the induced subgraph on it is connected
    if not vertices:
        return False
    seen = frontier = vertices & -vertices
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & vertices & ~seen
        seen |= new
        frontier |= new
    return seen == vertices


def is_connected(g: Graph, active: int | None = None) -> bool:
    """True iff the spanning subgraph ``(V, active)`` is connected."""
    if active is None:
        active = g.all_edges
    adj = [0] * g.n
    for i, (u, v) in enumerate(g.edges):
        if active >> i & 1:
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
    return _spans(adj, (1 << g.n) - 1)


def component_count(g: Graph, active: int) -> int:
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = g.n
    for i, (u, v) in enumerate(g.edges):
        if active >> i & 1:
            a, b = find(u - 1), find(v - 1)
            if a != b:
                parent[a] = b
                count -= 1
    return count


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(f"graph with n={g.n}, m={g.m} is not connected")


def _good_partitions(g: Graph) -> Iterator[int]:
    # v1-sides V1 in natural order: |V1| ascending, then lexicographic
    adj = g.adjacency()
    everything = (1 << g.n) - 1
    for size in range(0, g.n - 1):
        for others in itertools.combinations(range(1, g.n), size):
            side = 1
            for k in others:
                side |= 1 << k
            if _spans(adj, side) and _spans(adj, everything & ~side):
                yield side


def enumerate_mincuts(g: Graph) -> Hypergraph:
    """All minimal cutsets, one per good partition ``V1 ⊎ V2`` with ``v1 ∈ V1``.

    Partitions are visited with ``|V1|`` ascending and, within a size, in
    lexicographic order of the vertices of ``V1``.
    """
    require_connected(g)
    stars = g.star_masks()
    cuts = []
    for side in _good_partitions(g):
        cut = 0
        # edges inside V1 appear in two stars and cancel
        for low in _iter_low(side):
            cut ^= stars[low.bit_length() - 1]
        cuts.append(cut)
    return Hypergraph(g.m, tuple(cuts))


def _iter_low(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def mincuts_natural_order(n: int) -> Hypergraph:
    """The ``2**(n-1) - 1`` mincuts of ``Com(n)`` in natural order."""
    return enumerate_mincuts(complete_graph(n))


def enumerate_cycles(g: Graph, limit: int | None = None) -> Hypergraph:
    """All simple cycles as edge masks, sorted by (length, sorted labels).

    Each cycle is discovered once by backtracking from its smallest vertex
    ``s`` through vertices larger than ``s`` and kept only in the direction
    whose second vertex is smaller than its last.
    """
    label = {}
    nbrs: list[list[int]] = [[] for _ in range(g.n + 1)]
    for i, (u, v) in enumerate(g.edges):
        label[u, v] = label[v, u] = 1 << i
        nbrs[u].append(v)
        nbrs[v].append(u)
    for row in nbrs:
        row.sort()

    found = []
    for s in range(1, g.n + 1):
        path = [s]
        on_path = {s}
        # explicit stack of neighbour iterators avoids recursion limits
        stack = [iter(nbrs[s])]
        masks = [0]
        while stack:
            advanced = False
            for w in stack[-1]:
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        found.append(masks[-1] | label[path[-1], s])
                        if limit is not None and len(found) > limit:
                            raise LimitExceeded(f"more than {limit} cycles")
                    continue
                if w < s or w in on_path:
                    continue
                masks.append(masks[-1] | label[path[-1], w])
                path.append(w)
                on_path.add(w)
                stack.append(iter(nbrs[w]))
                advanced = True
                break
            if not advanced:
                stack.pop()
                masks.pop()
                on_path.discard(path.pop())
    found.sort(key=lambda c: (c.bit_count(), labels_of(c)))
    return Hypergraph(g.m, tuple(found))


def stars(g: Graph) -> Hypergraph:
    """Edge sets incident to ``v1, ..., vn`` in vertex order."""
    masks = g.star_masks()
    for v, mask in enumerate(masks, start=1):
        if not mask:
            raise GraphError(f"vertex v{v} is isolated; its star is empty")
    return Hypergraph(g.m, tuple(masks))


def parse_graph(text: str) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines ``u v``.

    Lines starting with ``#`` and blank lines are ignored.
    """
    header = None
    edges: list[tuple[int, int]] = []
    expected = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 1 or b < 0:
                raise GraphFormatError(f"bad header 'n m' = {a} {b}", lineno)
            header = (a, b)
            expected = b
            continue
        if len(edges) == expected:
            raise GraphFormatError(f"more than the declared {expected} edges", lineno)
        try:
            Graph(header[0], tuple(edges) + ((a, b),))
        except GraphError as exc:
            raise GraphFormatError(str(exc), lineno) from None
        edges.append((a, b))
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    if len(edges) != expected:
        raise GraphFormatError(f"declared {expected} edges, found {len(edges)}")
    return Graph(header[0], tuple(edges))


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_graph(g, comment))


def format_hyperedge(mask: int) -> str:
    return format_labels(mask)
