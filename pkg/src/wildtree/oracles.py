"""Independent ground truth: matrix-tree counting, brute force, reliability."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import LimitExceeded
from .graph import Graph, Hypergraph, component_count
from .rows import ERow, RankPoly

DEFAULT_CAP = 1 << 20


def laplacian(g: Graph) -> list[list[int]]:
    lap = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        a, b = u - 1, v - 1
        lap[a][a] += 1
        lap[b][b] += 1
        lap[a][b] -= 1
        lap[b][a] -= 1
    return lap


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [list(row) for row in matrix]
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, size):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, size):
                # exact: division by the previous pivot never leaves a remainder
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[-1][-1]


def kirchhoff_count(g: Graph, removed: int = 0) -> int:
    """Number of spanning trees: the Laplacian minor without row/column ``removed``."""
    if g.n == 1:
        return 1
    lap = laplacian(g)
    minor = [[x for j, x in enumerate(row) if j != removed]
             for i, row in enumerate(lap) if i != removed]
    return bareiss_determinant(minor)


def _subset_guard(size: int, cap: int) -> None:
    if size > cap:
        raise LimitExceeded(f"brute force over {size} candidates exceeds cap {cap}")


def brute_force_spanning_trees(g: Graph, cap: int = DEFAULT_CAP) -> list[int]:
    """All connected ``(n-1)``-edge subsets, as edge masks in increasing order."""
    _subset_guard(comb(g.m, g.n - 1), cap)
    out = []
    for combo in itertools.combinations(range(g.m), g.n - 1):
        mask = sum(1 << j for j in combo)
        if component_count(g, mask) == 1:
            out.append(mask)
    return sorted(out)


def brute_force_transversals(h: Hypergraph, cap: int = DEFAULT_CAP) -> list[int]:
    _subset_guard(1 << h.m, cap)
    return [x for x in range(1 << h.m) if all(x & e for e in h.edges)]


def brute_force_noncovers(h: Hypergraph, cap: int = DEFAULT_CAP) -> list[int]:
    _subset_guard(1 << h.m, cap)
    return [x for x in range(1 << h.m) if all(x & e != e for e in h.edges)]


def brute_force_connected(g: Graph, cap: int = DEFAULT_CAP) -> list[int]:
    _subset_guard(1 << g.m, cap)
    return [x for x in range(1 << g.m) if component_count(g, x) == 1]


def connected_count_by_size(rows: Sequence[ERow], m: int) -> list[int]:
    """``c[i]`` = members of size ``i`` over a disjoint row partition."""
    total = RankPoly((0,) * (m + 1))
    for r in rows:
        total = total + r.rank_polynomial()
    return list(total.padded(m + 1).coeffs)


@dataclass(frozen=True)
class ReliabilityPolynomial:
    """``Rel(p) = sum_i c[i] p**i (1-p)**(m-i)`` kept in both forms.

    ``counts`` are the connected-subset counts, ``coeffs`` the expanded
    integer coefficients of ``p**k``.
    """

    m: int
    counts: tuple[int, ...]
    coeffs: tuple[int, ...]

    def __call__(self, p):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * p + c
        return acc

    def __str__(self) -> str:
        terms = [f"{c}*p^{k}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def reliability_polynomial(c: Sequence[int], n: int, m: int) -> ReliabilityPolynomial:
    """Expand the all-terminal reliability polynomial from subset counts."""
    if len(c) != m + 1:
        raise ValueError(f"expected {m + 1} counts, got {len(c)}")
    if any(c[i] for i in range(min(n - 1, m + 1))):
        raise ValueError(f"a connected subgraph on {n} vertices needs >= {n - 1} edges")
    coeffs = [0] * (m + 1)
    for i, ci in enumerate(c):
        if not ci:
            continue
        for k in range(m - i + 1):
            coeffs[i + k] += ci * comb(m - i, k) * (-1) ** k
    return ReliabilityPolynomial(m, tuple(c), tuple(coeffs))

