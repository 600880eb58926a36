"""Forbidden patterns (paths and brooms) and exact containment tests.

Conventions: Path(m) has m vertices.  Broom(p, d) is a path on p vertices
with d extra pendant leaves attached to the last path vertex, so that vertex
has degree d+1 inside the pattern and the pattern has p+d vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import SearchTimeout
from .graph_core import BipartiteGraph, VertexRef

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class Path:
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"Path needs >= 1 vertex, got {self.m}")

    @property
    def vertex_count(self) -> int:
        return self.m

    def __str__(self) -> str:
        return f"path:{self.m}"


@dataclass(frozen=True)
class Broom:
    p: int
    d: int

    def __post_init__(self):
        if self.p < 2 or self.d < 1:
            raise ValueError(f"Broom needs p >= 2 and d >= 1, got ({self.p},{self.d})")

    @property
    def vertex_count(self) -> int:
        return self.p + self.d

    def __str__(self) -> str:
        return f"broom:{self.p}:{self.d}"


Pattern = Path | Broom


def parse_pattern(text: str) -> Pattern:
    """Parse the ``path:<m>`` / ``broom:<p>:<d>`` syntax."""
    parts = text.split(":")
    try:
        if parts[0] == "path" and len(parts) == 2:
            return Path(int(parts[1]))
        if parts[0] == "broom" and len(parts) == 3:
            return Broom(int(parts[1]), int(parts[2]))
    except ValueError as exc:
        raise ValueError(f"bad pattern {text!r}: {exc}") from None
    raise ValueError(f"bad pattern {text!r}, expected path:<m> or broom:<p>:<d>")


@dataclass
class Embedding:
    """A witness copy of a pattern: the path spine in order, plus star leaves."""

    spine: list[VertexRef]
    leaves: set[VertexRef] = field(default_factory=set)

    def validate(self, g: BipartiteGraph, pat: Pattern) -> bool:
        spine, leaves = self.spine, self.leaves
        if isinstance(pat, Path):
            if len(spine) != pat.m or leaves:
                return False
        else:
            if len(spine) != pat.p or len(leaves) != pat.d:
                return False
        seen = set(spine) | leaves
        if len(seen) != len(spine) + len(leaves):
            return False
        for v in seen:
            g.check_vertex(v)
        for u, v in zip(spine, spine[1:]):
            if not g.adjacent(u, v):
                return False
        return all(g.adjacent(leaf, spine[-1]) for leaf in leaves)


class _Budget:
    __slots__ = ("left", "limit")

    def __init__(self, limit: int):
        self.left = limit
        self.limit = limit

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise SearchTimeout(
                f"node-expansion budget {self.limit} exceeded", budget=self.limit
            )


def _ref(vid: int, a: int) -> VertexRef:
    return VertexRef("A", vid) if vid < a else VertexRef("B", vid - a)


def _vid(v: VertexRef, a: int) -> int:
    return v.index if v.part == "A" else a + v.index


def _components(adj: list[int], n: int) -> list[int]:
    """Reachability mask of each vertex's connected component."""
    comp = [0] * n
    for s in range(n):
        if comp[s]:
            continue
        reach = 1 << s
        while True:
            nxt = reach
            m = reach
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                nxt |= adj[v]
            if nxt == reach:
                break
            reach = nxt
        m = reach
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            comp[v] = reach
    return comp


def _longest_search(adj, starts, cutoff, budget, accept=None):
    """Backtracking longest-simple-path search over unified vertex ids.

    Returns (best length, one best path).  Stops as soon as a path of
    ``cutoff`` vertices satisfying ``accept`` (if given) is found.  Unvisited
    neighbors with identical adjacency masks are interchangeable, so only the
    first of each twin class is expanded.
    """
    best_len = 0
    best_path: list[int] = []
    path: list[int] = []

    def extend(v: int, visited: int) -> bool:
        nonlocal best_len, best_path
        path.append(v)
        n = len(path)
        if cutoff is not None and n >= cutoff:
            if accept is None or accept(path, visited):
                best_len = n
                best_path = path.copy()
                path.pop()
                return True
            path.pop()
            return False
        if accept is None and n > best_len:
            best_len = n
            best_path = path.copy()
        seen: list[int] = []
        m = adj[v] & ~visited
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            au = adj[u]
            if au in seen:
                continue
            seen.append(au)
            budget.spend()
            if extend(u, visited | (1 << u)):
                path.pop()
                return True
        path.pop()
        return False

    for s in starts:
        budget.spend()
        if extend(s, 1 << s):
            break
    return best_len, best_path


def _longest_rows(a, b, rows, cutoff=None, start=None, budget=None):
    g = BipartiteGraph(a, b, tuple(rows))
    adj = g.adjacency_ids()
    n = a + b
    budget = budget or _Budget(DEFAULT_BUDGET)
    if start is not None:
        return _longest_search(adj, [start], cutoff, budget)
    comp = _components(adj, n)
    best_len, best_path = 0, []
    for s in range(n):
        if comp[s].bit_count() <= best_len:
            continue
        ln, pth = _longest_search(adj, [s], cutoff, budget)
        if ln > best_len:
            best_len, best_path = ln, pth
            if cutoff is not None and best_len >= cutoff:
                break
    return best_len, best_path


def longest_path_length(g: BipartiteGraph, cutoff: int | None = None,
                        budget: int = DEFAULT_BUDGET) -> int:
    """Exact maximum number of vertices on a simple path; returns early once
    a path with ``cutoff`` vertices is found."""
    ln, _ = _longest_rows(g.a, g.b, g.rows, cutoff=cutoff, budget=_Budget(budget))
    return ln


def longest_path_from(g: BipartiteGraph, v: VertexRef, cutoff: int | None = None,
                      budget: int = DEFAULT_BUDGET) -> int:
    """Exact maximum path vertex count over simple paths starting at v."""
    g.check_vertex(v)
    ln, _ = _longest_rows(g.a, g.b, g.rows, cutoff=cutoff, start=_vid(v, g.a),
                          budget=_Budget(budget))
    return ln


def longest_path(g: BipartiteGraph, budget: int = DEFAULT_BUDGET) -> list[VertexRef]:
    """One longest simple path, deterministic for a given graph."""
    _, path = _longest_rows(g.a, g.b, g.rows, budget=_Budget(budget))
    return [_ref(v, g.a) for v in path]


def _find_broom_rows(a, b, rows, p, d, budget):
    g = BipartiteGraph(a, b, tuple(rows))
    adj = g.adjacency_ids()
    n = a + b
    hit = None
    for anchor in range(n):
        if adj[anchor].bit_count() < d + 1:
            continue

        def accept(path, visited, anchor=anchor):
            return (adj[anchor] & ~visited).bit_count() >= d

        ln, path = _longest_search(adj, [anchor], p, budget, accept=accept)
        if ln >= p:
            hit = (anchor, path)
            break
    if hit is None:
        return None
    anchor, path = hit
    visited = 0
    for v in path:
        visited |= 1 << v
    off = adj[anchor] & ~visited
    leaves = []
    while off and len(leaves) < d:
        u = (off & -off).bit_length() - 1
        off &= off - 1
        leaves.append(u)
    spine = list(reversed(path))
    return spine, leaves


def contains_pattern(g: BipartiteGraph, pat: Pattern,
                     budget: int = DEFAULT_BUDGET) -> Embedding | None:
    """An embedding of pat in g as a (not necessarily induced) subgraph, or None."""
    bud = _Budget(budget)
    if isinstance(pat, Path):
        if pat.m == 1:
            return Embedding([VertexRef("A", 0)])
        ln, path = _longest_rows(g.a, g.b, g.rows, cutoff=pat.m, budget=bud)
        if ln < pat.m:
            return None
        emb = Embedding([_ref(v, g.a) for v in path[: pat.m]])
    else:
        found = _find_broom_rows(g.a, g.b, g.rows, pat.p, pat.d, bud)
        if found is None:
            return None
        spine, leaves = found
        emb = Embedding([_ref(v, g.a) for v in spine],
                        {_ref(v, g.a) for v in leaves})
    assert emb.validate(g, pat)
    return emb


def is_free(g: BipartiteGraph, pat: Pattern, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff g contains no copy of pat."""
    return _free_rows(g.a, g.b, g.rows, pat, _Budget(budget))


def _free_rows(a, b, rows, pat, budget) -> bool:
    """Fast freeness check on raw row masks (no embedding construction)."""
    if isinstance(pat, Path):
        if pat.m == 1:
            return False
        ln, _ = _longest_rows(a, b, rows, cutoff=pat.m, budget=budget)
        return ln < pat.m
    return _find_broom_rows(a, b, rows, pat.p, pat.d, budget) is None
