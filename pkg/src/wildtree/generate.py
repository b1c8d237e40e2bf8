"""Reproducible test graphs."""

from __future__ import annotations

import random

from .errors import GraphError
from .graph import Graph


def random_connected_graph(n: int, m: int, seed: int | random.Random | None = None) -> Graph:
    """Uniform random attachment tree plus ``m - n + 1`` random extra edges.

    Edges are listed in lexicographic order, so labels match the order of
    ``Com(n)`` restricted to the chosen pairs.
    """
    if n < 1:
        raise GraphError("n must be >= 1")
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise GraphError(f"a connected simple graph on {n} vertices has {n - 1}..{n * (n - 1) // 2} edges, not {m}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    chosen = set()
    for k in range(1, n):
        u, v = order[k], order[rng.randrange(k)]
        chosen.add((min(u, v), max(u, v)))
    rest = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if (u, v) not in chosen]
    chosen.update(rng.sample(rest, m - (n - 1)))
    return Graph(n, tuple(sorted(chosen)))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphError("a cycle needs k >= 3")
    return Graph(k, tuple((i, i + 1) for i in range(1, k)) + ((1, k),))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def theta_graph() -> Graph:
    """Nine-vertex graph whose three cycles are {1..6}, {2,3,7..10}, {1,4..10}.

    Two branch vertices v1, v2 joined by the paths 2-3, 1-4-5-6 and 7-8-9-10.
    """
    return Graph(9, ((1, 4), (1, 3), (3, 2), (4, 5), (5, 6), (6, 2),
                     (1, 7), (7, 8), (8, 9), (9, 2)))
