"""Bitmask-backed bipartite graphs and the structural queries everything else needs.

A graph stores one integer mask per A-vertex whose bits are the B-indices it
is joined to.  Bipartiteness is structural: no same-part edge is
representable.  Graphs are immutable; mutating operations return new values.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, NamedTuple

from .errors import (
    AllOfOnePartDeleted,
    CapacityExceeded,
    IndexOutOfRange,
    InvalidSize,
)

MAX_PART = 32
CANONICAL_MAX_PART = 7


class VertexRef(NamedTuple):
    """A vertex addressed as (part, index), 0-based within its part."""

    part: str  # "A" or "B"
    index: int

    def __str__(self) -> str:
        return f"{self.part}:{self.index}"


def parse_vertex(text: str) -> VertexRef:
    """Parse the ``PART:INDEX`` syntax used by the CLI, e.g. ``A:0``."""
    part, _, idx = text.partition(":")
    if part not in ("A", "B") or not idx.isdigit():
        raise ValueError(f"bad vertex reference {text!r}, expected e.g. A:0")
    return VertexRef(part, int(idx))


@dataclass(frozen=True)
class BipartiteGraph:
    a: int
    b: int
    rows: tuple[int, ...]

    # -- indexing ---------------------------------------------------------

    def _check_edge(self, i: int, j: int) -> None:
        if not (0 <= i < self.a and 0 <= j < self.b):
            raise IndexOutOfRange(f"edge ({i},{j}) out of range for parts ({self.a},{self.b})")

    def check_vertex(self, v: VertexRef) -> None:
        size = self.a if v.part == "A" else self.b if v.part == "B" else -1
        if not 0 <= v.index < size:
            raise IndexOutOfRange(f"vertex {v} out of range for parts ({self.a},{self.b})")

    def vertices(self) -> Iterator[VertexRef]:
        for i in range(self.a):
            yield VertexRef("A", i)
        for j in range(self.b):
            yield VertexRef("B", j)

    # -- edges ------------------------------------------------------------

    def has_edge(self, i: int, j: int) -> bool:
        self._check_edge(i, j)
        return bool(self.rows[i] >> j & 1)

    def add_edge(self, i: int, j: int) -> "BipartiteGraph":
        self._check_edge(i, j)
        rows = list(self.rows)
        rows[i] |= 1 << j
        return BipartiteGraph(self.a, self.b, tuple(rows))

    def remove_edge(self, i: int, j: int) -> "BipartiteGraph":
        self._check_edge(i, j)
        rows = list(self.rows)
        rows[i] &= ~(1 << j)
        return BipartiteGraph(self.a, self.b, tuple(rows))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (A-index, B-index) pairs in lexicographic order."""
        out = []
        for i, row in enumerate(self.rows):
            m = row
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                out.append((i, j))
        return out

    # -- degrees ----------------------------------------------------------

    def col_mask(self, j: int) -> int:
        m = 0
        for i, row in enumerate(self.rows):
            if row >> j & 1:
                m |= 1 << i
        return m

    def degree(self, v: VertexRef) -> int:
        self.check_vertex(v)
        if v.part == "A":
            return self.rows[v.index].bit_count()
        return self.col_mask(v.index).bit_count()

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def max_degree(self) -> int:
        best = max(r.bit_count() for r in self.rows)
        for j in range(self.b):
            best = max(best, self.col_mask(j).bit_count())
        return best

    def neighbors(self, v: VertexRef) -> list[VertexRef]:
        self.check_vertex(v)
        if v.part == "A":
            m, part = self.rows[v.index], "B"
        else:
            m, part = self.col_mask(v.index), "A"
        out = []
        while m:
            k = (m & -m).bit_length() - 1
            m &= m - 1
            out.append(VertexRef(part, k))
        return out

    def adjacent(self, u: VertexRef, v: VertexRef) -> bool:
        if u.part == v.part:
            return False
        if u.part == "B":
            u, v = v, u
        return self.has_edge(u.index, v.index)

    # -- global structure --------------------------------------------------

    def adjacency_ids(self) -> list[int]:
        """Adjacency masks over unified vertex ids: A-vertex i is id i,
        B-vertex j is id a+j."""
        a = self.a
        adj = [row << a for row in self.rows]
        cols = [0] * self.b
        for i, row in enumerate(self.rows):
            m = row
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                cols[j] |= 1 << i
        adj.extend(cols)
        return adj

    def is_connected(self) -> bool:
        return _connected_rows(self.a, self.b, self.rows)

    def delete_vertices(
        self, victims: set[VertexRef] | frozenset[VertexRef]
    ) -> tuple["BipartiteGraph", dict[VertexRef, VertexRef]]:
        """Induced subgraph on the survivors, with compacted indices.

        Returns the new graph and the old-ref -> new-ref translation map for
        the surviving vertices.
        """
        for v in victims:
            self.check_vertex(v)
        dead_a = {v.index for v in victims if v.part == "A"}
        dead_b = {v.index for v in victims if v.part == "B"}
        if len(dead_a) == self.a or len(dead_b) == self.b:
            raise AllOfOnePartDeleted("deletion would empty one part")
        keep_a = [i for i in range(self.a) if i not in dead_a]
        keep_b = [j for j in range(self.b) if j not in dead_b]
        rows = []
        for i in keep_a:
            old = self.rows[i]
            m = 0
            for new_j, j in enumerate(keep_b):
                if old >> j & 1:
                    m |= 1 << new_j
            rows.append(m)
        trans = {VertexRef("A", i): VertexRef("A", ni) for ni, i in enumerate(keep_a)}
        trans.update(
            {VertexRef("B", j): VertexRef("B", nj) for nj, j in enumerate(keep_b)}
        )
        return BipartiteGraph(len(keep_a), len(keep_b), tuple(rows)), trans

    def relabel(self, perm_a: list[int], perm_b: list[int]) -> "BipartiteGraph":
        """New row i is old row perm_a[i]; new column j is old column perm_b[j]."""
        rows = []
        for i in range(self.a):
            old = self.rows[perm_a[i]]
            m = 0
            for j in range(self.b):
                if old >> perm_b[j] & 1:
                    m |= 1 << j
            rows.append(m)
        return BipartiteGraph(self.a, self.b, tuple(rows))

    def transpose(self) -> "BipartiteGraph":
        """The same graph with the roles of the two parts swapped."""
        return BipartiteGraph(self.b, self.a, tuple(self.col_mask(j) for j in range(self.b)))


def new_graph(a: int, b: int) -> BipartiteGraph:
    """An empty graph with part sizes a and b."""
    if a < 1 or b < 1:
        raise InvalidSize(f"part sizes must be >= 1, got ({a},{b})")
    if a > MAX_PART or b > MAX_PART:
        raise CapacityExceeded(f"part sizes ({a},{b}) exceed the cap of {MAX_PART}")
    return BipartiteGraph(a, b, (0,) * a)


def from_edges(a: int, b: int, edges) -> BipartiteGraph:
    g = new_graph(a, b)
    rows = list(g.rows)
    for i, j in edges:
        g._check_edge(i, j)
        rows[i] |= 1 << j
    return BipartiteGraph(a, b, tuple(rows))


def _connected_rows(a: int, b: int, rows) -> bool:
    """Connectivity of the (a+b)-vertex graph, BFS over bit-parallel frontiers."""
    n = a + b
    cols = [0] * b
    for i, row in enumerate(rows):
        m = row
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            cols[j] |= 1 << i
    reach = 1  # start from (A,0)
    while True:
        nxt = reach
        m = reach
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if v < a:
                nxt |= rows[v] << a
            else:
                nxt |= cols[v - a]
        if nxt == reach:
            return reach == (1 << n) - 1
        reach = nxt


# -- canonical form --------------------------------------------------------

def _row_key(mask: int, perm, b: int) -> int:
    """Row mask rewritten under a column permutation, with column 0 as the
    most significant bit so integer order equals row-major lexicographic order."""
    k = 0
    top = b - 1
    for pos, col in enumerate(perm):
        if mask >> col & 1:
            k |= 1 << (top - pos)
    return k


def _min_rows(a: int, b: int, rows) -> tuple[int, ...]:
    best = None
    for perm in permutations(range(b)):
        keyed = tuple(sorted(_row_key(m, perm, b) for m in rows))
        if best is None or keyed < best:
            best = keyed
    return best


def _guard_canonical(g: BipartiteGraph) -> None:
    if g.a > CANONICAL_MAX_PART or g.b > CANONICAL_MAX_PART:
        raise CapacityExceeded(
            f"canonical form limited to parts <= {CANONICAL_MAX_PART}, got ({g.a},{g.b})"
        )


def canonical_key(g: BipartiteGraph) -> bytes:
    """A byte string equal for exactly the graphs in one isomorphism class.

    Minimizes the row-major adjacency matrix over all row and column
    permutations, and over the part swap when the parts have equal size.
    """
    _guard_canonical(g)
    best = _min_rows(g.a, g.b, g.rows)
    if g.a == g.b:
        t = g.transpose()
        best = min(best, _min_rows(t.a, t.b, t.rows))
    return bytes([g.a, g.b]) + bytes(best)


def canonical_form(g: BipartiteGraph) -> BipartiteGraph:
    """The canonical representative of g's isomorphism class."""
    key = canonical_key(g)
    return graph_from_key(key)


def graph_from_key(key: bytes) -> BipartiteGraph:
    a, b = key[0], key[1]
    rows = []
    for k in key[2:]:
        m = 0
        for j in range(b):
            if k >> (b - 1 - j) & 1:
                m |= 1 << j
        rows.append(m)
    return BipartiteGraph(a, b, tuple(rows))
