"""Executable forms of the constructive lemmas.

Covers the DFS-tree machinery (spanning trees with an optional pre-visited
seed path, leaf-in-part descent), the removable vertex/pair finders used by
the induction certificates, and the two standalone broom lemma checkers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    HypothesisViolated,
    InvalidSeedPath,
    LemmaFalsified,
    NotConnected,
)
from .graph_core import BipartiteGraph, VertexRef
from .patterns import (
    Broom,
    Path,
    is_free,
    longest_path,
    longest_path_from,
)


@dataclass
class RootedSpanningTree:
    root: VertexRef
    parent: dict[VertexRef, VertexRef]
    visit_order: list[VertexRef]

    def children(self) -> dict[VertexRef, list[VertexRef]]:
        kids: dict[VertexRef, list[VertexRef]] = {v: [] for v in self.visit_order}
        for child, par in self.parent.items():
            kids[par].append(child)
        for lst in kids.values():
            lst.sort()
        return kids

    def leaves(self) -> list[VertexRef]:
        parents = set(self.parent.values())
        return sorted(v for v in self.visit_order if v not in parents)

    def path_from_root(self, v: VertexRef) -> list[VertexRef]:
        out = [v]
        while v != self.root:
            v = self.parent[v]
            out.append(v)
        out.reverse()
        return out


def dfs_tree(g: BipartiteGraph, root: VertexRef,
             seed_path: list[VertexRef] | None = None) -> RootedSpanningTree:
    """Depth-first spanning tree rooted at ``root``; children are explored in
    ascending (part, index) order with A before B.

    With ``seed_path``, that path is treated as already visited in order
    before the search starts, so it becomes a root-starting path of the tree.
    """
    g.check_vertex(root)
    if not g.is_connected():
        raise NotConnected("dfs_tree needs a connected graph")
    seed = list(seed_path) if seed_path else [root]
    if seed[0] != root:
        raise InvalidSeedPath("seed path must start at the root")
    if len(set(seed)) != len(seed):
        raise InvalidSeedPath("seed path repeats a vertex")
    for u, v in zip(seed, seed[1:]):
        if not g.adjacent(u, v):
            raise InvalidSeedPath(f"seed path step {u} -> {v} is not an edge")

    visited = set(seed)
    order = list(seed)
    parent = {v: u for u, v in zip(seed, seed[1:])}

    def explore(v: VertexRef) -> None:
        for u in g.neighbors(v):
            if u not in visited:
                visited.add(u)
                parent[u] = v
                order.append(u)
                explore(u)

    for v in reversed(seed):
        explore(v)
    return RootedSpanningTree(root, parent, order)


def leaf_in_part(t: RootedSpanningTree, g: BipartiteGraph, which: str) -> VertexRef:
    """A tree leaf in the requested part, found by recursive descent into a
    child subtree whose part-count imbalance keeps the invariant alive."""
    if which not in ("A", "B"):
        raise ValueError(f"part must be 'A' or 'B', got {which!r}")
    n_req = g.b if which == "B" else g.a
    n_other = g.a if which == "B" else g.b
    ok = (t.root.part != which and n_other <= n_req) or (
        t.root.part == which and n_other < n_req
    )
    if not ok:
        raise HypothesisViolated(
            f"leaf-in-part needs root outside {which} with |other| <= |{which}| "
            f"or root inside with |other| < |{which}|"
        )
    kids = t.children()
    counts: dict[VertexRef, tuple[int, int]] = {}

    def fill(v: VertexRef) -> tuple[int, int]:
        req = 1 if v.part == which else 0
        other = 1 - req
        for c in kids[v]:
            cr, co = fill(c)
            req += cr
            other += co
        counts[v] = (req, other)
        return req, other

    fill(t.root)

    v = t.root
    while True:
        children = kids[v]
        if not children:
            if v.part != which:
                raise LemmaFalsified(
                    f"leaf-in-part descent ended at {v} outside part {which}", graph=g
                )
            return v
        nxt = None
        if v.part == which:
            for c in children:
                req, other = counts[c]
                if other <= req:
                    nxt = c
                    break
        else:
            for c in children:
                req, other = counts[c]
                if other < req:
                    nxt = c
                    break
        if nxt is None:
            raise LemmaFalsified(
                f"leaf-in-part descent stuck at {v}: no child subtree keeps the "
                f"imbalance invariant", graph=g
            )
        v = nxt


def _orientation(g: BipartiteGraph) -> tuple[str, str, int, int]:
    """(big part, small part, big size, small size); ties go to B."""
    if g.b >= g.a:
        return "B", "A", g.b, g.a
    return "A", "B", g.a, g.b


def _removal_keeps_connected(g: BipartiteGraph, victims: set[VertexRef]) -> bool:
    rest, _ = g.delete_vertices(victims)
    return rest.is_connected()


def _check_unbalanced_hypotheses(g: BipartiteGraph, k: int) -> None:
    if k < 3:
        raise HypothesisViolated(f"need k >= 3, got {k}")
    _, _, big, small = _orientation(g)
    if small < k:
        raise HypothesisViolated(f"need both parts >= k={k}, got ({g.a},{g.b})")
    if not g.is_connected():
        raise HypothesisViolated("graph is not connected")
    if not is_free(g, Path(2 * k)):
        raise HypothesisViolated(f"graph contains a path on {2 * k} vertices")


def find_removable_vertex(g: BipartiteGraph, k: int) -> VertexRef:
    """Smallest-index vertex of the larger part with degree <= k-2 whose
    removal keeps the graph connected."""
    _check_unbalanced_hypotheses(g, k)
    big, _, big_size, _ = _orientation(g)
    for i in range(big_size):
        v = VertexRef(big, i)
        if g.degree(v) <= k - 2 and _removal_keeps_connected(g, {v}):
            return v
    raise LemmaFalsified(
        f"no removable vertex with degree <= {k - 2} in the larger part "
        f"(counterexample candidate, k={k})",
        graph=g,
        details={"k": k},
    )


def find_removable_vertex_constructive(g: BipartiteGraph, k: int) -> VertexRef:
    """Replay of the unbalanced lemma's proof: DFS from an A-vertex, take a
    tree leaf in the larger part; if its degree is too big, fall back to a
    vertex of the larger part off the root-to-leaf path."""
    _check_unbalanced_hypotheses(g, k)
    big, small, big_size, _ = _orientation(g)
    root = VertexRef(small, 0)
    t = dfs_tree(g, root)
    leaf = leaf_in_part(t, g, big)
    if g.degree(leaf) <= k - 2:
        candidate = leaf
    else:
        on_path = set(t.path_from_root(leaf))
        candidate = None
        for i in range(big_size):
            v = VertexRef(big, i)
            if v not in on_path:
                candidate = v
                break
        if candidate is None:
            raise LemmaFalsified(
                "cycle case of the unbalanced lemma found no vertex off the "
                "root-to-leaf path", graph=g, details={"k": k},
            )
    if g.degree(candidate) <= k - 2 and _removal_keeps_connected(g, {candidate}):
        return candidate
    raise LemmaFalsified(
        f"constructed vertex {candidate} fails the removability predicate",
        graph=g,
        details={"k": k, "candidate": str(candidate)},
    )


def _check_balanced_hypotheses(g: BipartiteGraph, k: int) -> None:
    if k < 3:
        raise HypothesisViolated(f"need k >= 3, got {k}")
    if g.a != g.b:
        raise HypothesisViolated(f"need a balanced graph, got parts ({g.a},{g.b})")
    if g.a < k:
        raise HypothesisViolated(f"need n >= k={k}, got n={g.a}")
    if not g.is_connected():
        raise HypothesisViolated("graph is not connected")
    if not is_free(g, Path(2 * k)):
        raise HypothesisViolated(f"graph contains a path on {2 * k} vertices")


def _pair_ok(g: BipartiteGraph, k: int, x: VertexRef, y: VertexRef) -> bool:
    return (
        x.part != y.part
        and g.degree(x) + g.degree(y) <= k - 1
        and _removal_keeps_connected(g, {x, y})
    )


def find_removable_pair(g: BipartiteGraph, k: int) -> tuple[VertexRef, VertexRef]:
    """Lexicographically first cross-part pair with degree sum <= k-1 whose
    removal keeps the graph connected (and balanced, by construction)."""
    _check_balanced_hypotheses(g, k)
    n = g.a
    for i in range(n):
        x = VertexRef("A", i)
        dx = g.degree(x)
        for j in range(n):
            y = VertexRef("B", j)
            if dx + g.degree(y) <= k - 1 and _removal_keeps_connected(g, {x, y}):
                return x, y
    raise LemmaFalsified(
        f"no removable cross-part pair with degree sum <= {k - 1} "
        f"(counterexample candidate, k={k})",
        graph=g,
        details={"k": k},
    )


def find_removable_pair_constructive(g: BipartiteGraph, k: int) -> tuple[VertexRef, VertexRef]:
    """Replay of the balanced lemma's proof skeleton: take a longest path; if
    its endpoints straddle the parts they are the pair, otherwise seed a DFS
    with the path and pair its first endpoint with a tree leaf from the
    opposite part."""
    _check_balanced_hypotheses(g, k)
    p = longest_path(g)
    u1, up = p[0], p[-1]
    if u1.part != up.part:
        x, y = (u1, up) if u1.part == "A" else (up, u1)
    else:
        t = dfs_tree(g, u1, seed_path=p)
        other = "B" if u1.part == "A" else "A"
        leaf = leaf_in_part(t, g, other)
        x, y = u1, leaf
    if _pair_ok(g, k, x, y):
        return x, y
    raise LemmaFalsified(
        f"constructed pair ({x},{y}) fails the removability predicate",
        graph=g,
        details={"k": k, "pair": [str(x), str(y)]},
    )


@dataclass
class LemmaReport:
    hypotheses_met: bool
    conclusion_holds: bool
    witness: dict = field(default_factory=dict)
    reason: str | None = None


def check_endpoint_lemma(g: BipartiteGraph, k: int) -> LemmaReport:
    """If some vertex starts no path on 2k vertices, the edge count is at most
    (k-1)(a+b)."""
    if k < 1:
        raise HypothesisViolated(f"need k >= 1, got {k}")
    if not g.is_connected():
        raise HypothesisViolated("graph is not connected")
    non_endpoints = [
        v for v in g.vertices() if longest_path_from(g, v, cutoff=2 * k) < 2 * k
    ]
    if not non_endpoints:
        return LemmaReport(False, True,
                           reason=f"every vertex starts a path on {2 * k} vertices")
    bound = (k - 1) * (g.a + g.b)
    edges = g.edge_count
    return LemmaReport(
        True,
        edges <= bound,
        witness={
            "non_endpoints": [str(v) for v in non_endpoints],
            "edges": edges,
            "bound": bound,
        },
    )


def check_degree_lemma(g: BipartiteGraph, k: int, d: int) -> LemmaReport:
    """A connected, sufficiently dense, Broom(2k+1, d)-free graph with both
    parts >= k has maximum degree at most k+d-1."""
    if k < 1 or d < 1:
        raise HypothesisViolated(f"need k, d >= 1, got ({k},{d})")
    edges = g.edge_count
    floor_edges = k * (g.a + g.b) + 1
    if not g.is_connected():
        return LemmaReport(False, True, reason="graph is not connected")
    if min(g.a, g.b) < k:
        return LemmaReport(False, True, reason=f"smaller part below k={k}")
    if edges < floor_edges:
        return LemmaReport(False, True,
                           reason=f"only {edges} edges, below {floor_edges}")
    if not is_free(g, Broom(2 * k + 1, d)):
        return LemmaReport(False, True, reason=f"contains Broom({2 * k + 1},{d})")
    bound = k + d - 1
    md = g.max_degree()
    offenders = [str(v) for v in g.vertices() if g.degree(v) > bound]
    return LemmaReport(
        True,
        md <= bound,
        witness={"max_degree": md, "bound": bound, "offenders": offenders},
    )
