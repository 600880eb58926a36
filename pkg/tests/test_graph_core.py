from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bcturan import (
    BipartiteGraph,
    VertexRef,
    canonical_form,
    canonical_key,
    complete_bipartite,
    from_edges,
    new_graph,
    parse_vertex,
    path_extremal,
    broom_circulant,
)
from bcturan.errors import (
    AllOfOnePartDeleted,
    CapacityExceeded,
    IndexOutOfRange,
    InvalidSize,
)

from conftest import random_connected_bipartite


def test_new_graph_empty():
    g = new_graph(1, 1)
    assert g.edge_count == 0
    assert (g.a, g.b) == (1, 1)
    g = new_graph(3, 4)
    assert g.edge_count == 0
    assert (g.a, g.b) == (3, 4)


def test_new_graph_rejects_degenerate_sizes():
    with pytest.raises(InvalidSize):
        new_graph(0, 4)
    with pytest.raises(InvalidSize):
        new_graph(4, 0)
    with pytest.raises(CapacityExceeded):
        new_graph(33, 4)


def test_add_edge_set_semantics():
    g = new_graph(2, 2).add_edge(0, 0)
    assert g.edge_count == 1
    assert g.add_edge(0, 0).edge_count == 1
    assert g.remove_edge(1, 1) == g
    assert g.remove_edge(0, 0).edge_count == 0
    with pytest.raises(IndexOutOfRange):
        g.add_edge(2, 0)


def test_degrees_and_edge_count():
    g = complete_bipartite(3, 4)
    assert all(g.degree(VertexRef("A", i)) == 4 for i in range(3))
    assert all(g.degree(VertexRef("B", j)) == 3 for j in range(4))
    assert g.edge_count == 12
    assert path_extremal(3, 4, 3).edge_count == 6
    assert broom_circulant(13, 5).max_degree() == 5


def test_degree_sum_identity():
    g = path_extremal(4, 6, 3)
    assert sum(g.degree(VertexRef("A", i)) for i in range(g.a)) == g.edge_count
    assert sum(g.degree(VertexRef("B", j)) for j in range(g.b)) == g.edge_count


def test_is_connected():
    assert not new_graph(2, 2).is_connected()
    assert complete_bipartite(1, 1).is_connected()
    # direct expansion of the circulant index formula: n=4, d=2 is the 8-cycle
    assert broom_circulant(4, 2).is_connected()


def test_delete_vertices():
    g = complete_bipartite(2, 2)
    h, trans = g.delete_vertices({VertexRef("A", 0)})
    assert (h.a, h.b) == (1, 2)
    assert h.edge_count == 2
    assert trans[VertexRef("A", 1)] == VertexRef("A", 0)
    assert trans[VertexRef("B", 1)] == VertexRef("B", 1)


def test_delete_pendant_from_path_extremal():
    # certificate-step replay: 6 - degree(u_1) = 5
    g = path_extremal(3, 4, 3)
    h, _ = g.delete_vertices({VertexRef("B", 0)})
    assert (h.a, h.b) == (3, 3)
    assert h.edge_count == 5
    assert h.is_connected()


def test_delete_whole_part_rejected():
    g = complete_bipartite(2, 2)
    with pytest.raises(AllOfOnePartDeleted):
        g.delete_vertices({VertexRef("A", 0), VertexRef("A", 1)})


def test_edge_count_after_single_deletion(rng):
    for _ in range(50):
        g = random_connected_bipartite(rng, max_part=6)
        for v in g.vertices():
            if (v.part == "A" and g.a == 1) or (v.part == "B" and g.b == 1):
                continue
            h, _ = g.delete_vertices({v})
            assert h.edge_count == g.edge_count - g.degree(v)


def test_canonical_key_relabel_invariance():
    # two labelings of the 4-path on parts (2,2)
    p1 = from_edges(2, 2, [(0, 0), (1, 0), (1, 1)])
    p2 = from_edges(2, 2, [(0, 1), (1, 1), (1, 0)])
    assert canonical_key(p1) == canonical_key(p2)
    matching = from_edges(2, 2, [(0, 0), (1, 1)])
    assert canonical_key(p1) != canonical_key(matching)


def test_canonical_key_part_swap():
    g = from_edges(2, 2, [(0, 0), (0, 1), (1, 0)])
    assert canonical_key(g) == canonical_key(g.transpose())


def test_canonical_key_complete_bipartite_all_relabelings():
    # enumerate all 2!*3! relabelings and compare
    g = complete_bipartite(2, 3)
    keys = {
        canonical_key(g.relabel(list(pa), list(pb)))
        for pa in permutations(range(2))
        for pb in permutations(range(3))
    }
    assert len(keys) == 1


def test_canonical_key_guard():
    with pytest.raises(CapacityExceeded):
        canonical_key(complete_bipartite(8, 3))


def test_canonical_form_idempotent(rng):
    for _ in range(30):
        g = random_connected_bipartite(rng, max_part=5)
        c = canonical_form(g)
        assert canonical_form(c) == c
        assert canonical_key(c) == canonical_key(g)


@st.composite
def small_graphs(draw):
    a = draw(st.integers(1, 4))
    b = draw(st.integers(1, 4))
    rows = tuple(draw(st.integers(0, (1 << b) - 1)) for _ in range(a))
    return BipartiteGraph(a, b, rows)


@given(small_graphs(), st.randoms(use_true_random=False))
@settings(max_examples=200, deadline=None)
def test_relabeling_preserves_key_and_connectivity(g, rnd):
    pa = list(range(g.a))
    pb = list(range(g.b))
    rnd.shuffle(pa)
    rnd.shuffle(pb)
    h = g.relabel(pa, pb)
    assert canonical_key(h) == canonical_key(g)
    assert h.is_connected() == g.is_connected()
    assert h.edge_count == g.edge_count


def test_transpose_roundtrip():
    g = path_extremal(3, 5, 3)
    assert g.transpose().transpose() == g
    assert g.transpose().edge_count == g.edge_count


def test_parse_vertex():
    assert parse_vertex("A:0") == VertexRef("A", 0)
    assert parse_vertex("B:12") == VertexRef("B", 12)
    with pytest.raises(ValueError):
        parse_vertex("C:1")
    with pytest.raises(ValueError):
        parse_vertex("A:x")
