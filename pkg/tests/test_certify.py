import dataclasses

import pytest

from bcturan import (
    BaseCase,
    Certificate,
    Path,
    RemoveOne,
    RemoveTwo,
    VertexRef,
    bound_from_certificate,
    build_certificate,
    complete_bipartite,
    enumerate_free_graphs,
    path_extremal,
    verify_certificate,
)
from bcturan.certify import formula_bound
from bcturan.errors import HypothesisViolated, MalformedCertificate


def test_formula_bound():
    assert formula_bound(3, 4, 3) == 6
    assert formula_bound(4, 5, 4) == 12
    assert formula_bound(3, 3, 3) == 5


def test_build_certificate_example():
    g = path_extremal(3, 4, 3)
    cert = build_certificate(g, 3)
    assert cert.steps == (RemoveOne(VertexRef("B", 0), 1), BaseCase(3, 5))
    assert cert.claimed_bound == 6
    assert not cert.swapped
    assert bound_from_certificate(cert) == 6
    assert verify_certificate(g, 3, cert)


def test_budget_sum_telescopes():
    for k in (3, 4):
        for a in range(k, k + 3):
            for b in range(a, a + 4):
                n_one, n_two = b - a, a - k
                steps = (
                    tuple(RemoveOne(VertexRef("B", 0), 0) for _ in range(n_one))
                    + tuple(
                        RemoveTwo((VertexRef("A", 0), VertexRef("B", 0)), 0)
                        for _ in range(n_two)
                    )
                    + (BaseCase(k, 0),)
                )
                cert = Certificate(k, a, b, False, steps, formula_bound(a, b, k))
                assert bound_from_certificate(cert) == formula_bound(a, b, k)


def test_build_and_verify_across_corpus():
    for a, b in ((3, 3), (3, 4), (3, 5), (4, 4), (4, 5)):
        for g in enumerate_free_graphs(a, b, Path(6)):
            cert = build_certificate(g, 3)
            assert g.edge_count <= cert.claimed_bound
            res = verify_certificate(g, 3, cert)
            assert res.ok, res.reason


def test_build_certificate_swaps_parts():
    g = path_extremal(3, 5, 3).transpose()  # parts (5, 3)
    cert = build_certificate(g, 3)
    assert cert.swapped
    assert (cert.a, cert.b) == (3, 5)
    assert verify_certificate(g, 3, cert)


def test_build_certificate_hypotheses():
    with pytest.raises(HypothesisViolated):
        build_certificate(complete_bipartite(4, 4), 3)  # contains P6
    with pytest.raises(HypothesisViolated):
        build_certificate(path_extremal(3, 4, 3), 4)  # parts below k


def test_verify_rejects_wrong_k():
    g = path_extremal(3, 4, 3)
    cert = build_certificate(g, 3)
    res = verify_certificate(g, 4, cert)
    assert not res and "k=3" in res.reason


def test_verify_rejects_tampered_degree():
    g = path_extremal(3, 4, 3)
    cert = build_certificate(g, 3)
    bad_step = dataclasses.replace(cert.steps[0], degree_at_removal=0)
    bad = dataclasses.replace(cert, steps=(bad_step,) + cert.steps[1:])
    res = verify_certificate(g, 3, bad)
    assert not res and "degree mismatch" in res.reason


def test_verify_rejects_tampered_bound():
    g = path_extremal(3, 4, 3)
    cert = build_certificate(g, 3)
    bad = dataclasses.replace(cert, claimed_bound=7)
    res = verify_certificate(g, 3, bad)
    assert not res and "bound" in res.reason


def test_verify_rejects_tampered_base_case():
    g = path_extremal(3, 4, 3)
    cert = build_certificate(g, 3)
    bad = dataclasses.replace(
        cert, steps=cert.steps[:-1] + (BaseCase(3, 4),)
    )
    res = verify_certificate(g, 3, bad)
    assert not res and "base case" in res.reason


def test_verify_rejects_wrong_victim():
    g = path_extremal(3, 4, 3)
    cert = build_certificate(g, 3)
    # B:1 has degree 1 too, but then the recorded base-case count is stale
    swapped_victim = dataclasses.replace(cert.steps[0], victim=VertexRef("A", 0))
    bad = dataclasses.replace(cert, steps=(swapped_victim,) + cert.steps[1:])
    res = verify_certificate(g, 3, bad)
    assert not res


def test_verify_rejects_wrong_graph():
    g = path_extremal(3, 4, 3)
    cert = build_certificate(g, 3)
    other = path_extremal(3, 5, 3)
    res = verify_certificate(other, 3, cert)
    assert not res and "parts" in res.reason


def test_malformed_structure_rejected():
    cert = Certificate(3, 3, 4, False, (BaseCase(3, 5),), 6)
    with pytest.raises(MalformedCertificate):
        bound_from_certificate(cert)
    res = verify_certificate(path_extremal(3, 4, 3), 3, cert)
    assert not res


def test_verify_rejects_overfull_graph():
    # a graph with more edges than the certificate's claimed bound must fail
    g = path_extremal(3, 4, 3)
    cert = build_certificate(g, 3)
    fat = g.add_edge(1, 0)
    res = verify_certificate(fat, 3, cert)
    assert not res
