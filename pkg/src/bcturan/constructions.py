"""Generators for the extremal witness graphs."""

from __future__ import annotations

from .errors import HypothesisViolated
from .graph_core import BipartiteGraph, new_graph


def complete_bipartite(a: int, b: int) -> BipartiteGraph:
    g = new_graph(a, b)
    full = (1 << b) - 1
    return BipartiteGraph(a, b, (full,) * g.a)


def path_extremal(a: int, b: int, k: int) -> BipartiteGraph:
    """The path-free extremal graph: K_{k-2,b} on the first k-2 A-vertices,
    plus the remaining a-(k-2) A-vertices pendant on the last B-vertex.

    Has (k-2)(b-1) + a edges and no path on 2k-1 vertices.
    """
    if not b >= a >= k >= 3:
        raise HypothesisViolated(f"need b >= a >= k >= 3, got (a,b,k)=({a},{b},{k})")
    g = new_graph(a, b)
    full = (1 << b) - 1
    pendant = 1 << (b - 1)
    rows = tuple(full if i < k - 2 else pendant for i in range(a))
    return BipartiteGraph(g.a, g.b, rows)


def broom_circulant(n: int, d: int) -> BipartiteGraph:
    """The d-regular circulant on parts (n, n): A-vertex i joined to
    B-vertices i, i+1, ..., i+d-1 (mod n).  Broom(p, d)-free for every p >= 2
    because its maximum degree is d."""
    if not n >= d >= 2:
        raise HypothesisViolated(f"need n >= d >= 2, got (n,d)=({n},{d})")
    g = new_graph(n, n)
    rows = []
    for i in range(n):
        m = 0
        for j in range(d):
            m |= 1 << ((i + j) % n)
        rows.append(m)
    return BipartiteGraph(g.a, g.b, tuple(rows))
