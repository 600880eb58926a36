"""Induction replay certificates for the path upper bound.

A certificate is an ordered transcript of vertex removals, each carrying a
degree budget, ending in a base-case edge count.  The budget sum
(b-a)(k-2) + (a-k)(k-1) + (k-1)^2 + 1 telescopes to (k-2)(b-1) + a, so a
verified certificate upper-bounds the edge count of the certified graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BaseCaseViolated, HypothesisViolated, MalformedCertificate
from .graph_core import BipartiteGraph, VertexRef
from .lemmas import find_removable_pair, find_removable_vertex
from .patterns import Path, is_free


@dataclass(frozen=True)
class RemoveOne:
    victim: VertexRef
    degree_at_removal: int


@dataclass(frozen=True)
class RemoveTwo:
    victims: tuple[VertexRef, VertexRef]
    degree_sum: int


@dataclass(frozen=True)
class BaseCase:
    k: int
    edges: int


CertStep = RemoveOne | RemoveTwo | BaseCase


@dataclass(frozen=True)
class Certificate:
    k: int
    a: int
    b: int
    swapped: bool
    steps: tuple[CertStep, ...]
    claimed_bound: int


def formula_bound(a: int, b: int, k: int) -> int:
    return (k - 2) * (b - 1) + a


def _check_structure(cert: Certificate) -> None:
    k, a, b = cert.k, cert.a, cert.b
    if not b >= a >= k >= 3:
        raise MalformedCertificate(f"need b >= a >= k >= 3, got (a,b,k)=({a},{b},{k})")
    steps = cert.steps
    n_one, n_two = b - a, a - k
    if len(steps) != n_one + n_two + 1:
        raise MalformedCertificate(
            f"expected {n_one} single removals, {n_two} pair removals and one "
            f"base case, got {len(steps)} steps"
        )
    for s in steps[:n_one]:
        if not isinstance(s, RemoveOne):
            raise MalformedCertificate("single-removal phase contains a foreign step")
    for s in steps[n_one : n_one + n_two]:
        if not isinstance(s, RemoveTwo):
            raise MalformedCertificate("pair-removal phase contains a foreign step")
    if not isinstance(steps[-1], BaseCase):
        raise MalformedCertificate("certificate does not end in a base case")


def bound_from_certificate(cert: Certificate) -> int:
    """Sum of the per-step budgets; equals (k-2)(b-1)+a for conforming
    certificates."""
    _check_structure(cert)
    k = cert.k
    total = 0
    for step in cert.steps:
        if isinstance(step, RemoveOne):
            total += k - 2
        elif isinstance(step, RemoveTwo):
            total += k - 1
        else:
            total += (k - 1) ** 2 + 1
    return total


def build_certificate(g: BipartiteGraph, k: int) -> Certificate:
    """Replay the main induction on g: peel larger-part vertices until the
    graph is balanced, then pairs until both parts have size k, then record
    the base case."""
    swapped = g.a > g.b
    if swapped:
        g = g.transpose()
    if not g.b >= g.a >= k or k < 3:
        raise HypothesisViolated(
            f"need min part >= k >= 3, got parts ({g.a},{g.b}), k={k}"
        )
    if not g.is_connected():
        raise HypothesisViolated("graph is not connected")
    if not is_free(g, Path(2 * k)):
        raise HypothesisViolated(f"graph contains a path on {2 * k} vertices")

    a0, b0 = g.a, g.b
    steps: list[CertStep] = []
    cur = g
    while cur.b > cur.a:
        x = find_removable_vertex(cur, k)
        steps.append(RemoveOne(x, cur.degree(x)))
        cur, _ = cur.delete_vertices({x})
    while cur.a == cur.b > k:
        x, y = find_removable_pair(cur, k)
        steps.append(RemoveTwo((x, y), cur.degree(x) + cur.degree(y)))
        cur, _ = cur.delete_vertices({x, y})
    edges = cur.edge_count
    if edges > (k - 1) ** 2 + 1:
        raise BaseCaseViolated(
            f"residual {k}x{k} graph has {edges} edges > {(k - 1) ** 2 + 1}"
        )
    steps.append(BaseCase(k, edges))
    return Certificate(k, a0, b0, swapped, tuple(steps), formula_bound(a0, b0, k))


@dataclass
class VerificationResult:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(g: BipartiteGraph, k: int, cert: Certificate) -> VerificationResult:
    """Replay the certificate's removals on g, rechecking every recorded
    degree, every budget, connectivity after each removal, the base case and
    the claimed bound."""

    def fail(reason: str) -> VerificationResult:
        return VerificationResult(False, reason)

    if cert.k != k:
        return fail(f"certificate is for k={cert.k}, not k={k}")
    try:
        _check_structure(cert)
        budget_sum = bound_from_certificate(cert)
    except MalformedCertificate as exc:
        return fail(str(exc))
    if cert.claimed_bound != formula_bound(cert.a, cert.b, k):
        return fail("claimed bound does not match (k-2)(b-1)+a")
    if budget_sum != cert.claimed_bound:
        return fail("claimed bound does not match the step budget sum")

    if cert.swapped:
        g = g.transpose()
    if (g.a, g.b) != (cert.a, cert.b):
        return fail(
            f"graph parts ({g.a},{g.b}) do not match certificate ({cert.a},{cert.b})"
        )
    original_edges = g.edge_count

    cur = g
    for idx, step in enumerate(cert.steps, start=1):
        if isinstance(step, RemoveOne):
            v = step.victim
            try:
                cur.check_vertex(v)
            except Exception:
                return fail(f"victim out of range at step {idx}")
            big = "B" if cur.b > cur.a else "A"
            if v.part != big:
                return fail(f"victim not in the larger part at step {idx}")
            if cur.degree(v) != step.degree_at_removal:
                return fail(f"recorded degree mismatch at step {idx}")
            if step.degree_at_removal > k - 2:
                return fail(f"budget violated at step {idx}")
            cur, _ = cur.delete_vertices({v})
            if not cur.is_connected():
                return fail(f"graph disconnected after step {idx}")
        elif isinstance(step, RemoveTwo):
            x, y = step.victims
            try:
                cur.check_vertex(x)
                cur.check_vertex(y)
            except Exception:
                return fail(f"victim out of range at step {idx}")
            if cur.a != cur.b:
                return fail(f"pair removal on an unbalanced graph at step {idx}")
            if x.part == y.part:
                return fail(f"pair removal within one part at step {idx}")
            if cur.degree(x) + cur.degree(y) != step.degree_sum:
                return fail(f"recorded degree sum mismatch at step {idx}")
            if step.degree_sum > k - 1:
                return fail(f"budget violated at step {idx}")
            cur, _ = cur.delete_vertices({x, y})
            if not cur.is_connected():
                return fail(f"graph disconnected after step {idx}")
            if cur.a != cur.b:
                return fail(f"graph unbalanced after step {idx}")
        else:
            if step.k != k:
                return fail("base case recorded for a different k")
            if (cur.a, cur.b) != (k, k):
                return fail(f"residual parts ({cur.a},{cur.b}) are not ({k},{k})")
            if cur.edge_count != step.edges:
                return fail("base case edge count mismatch")
            if step.edges > (k - 1) ** 2 + 1:
                return fail("base case bound violated")
    if original_edges > cert.claimed_bound:
        return fail("graph has more edges than the claimed bound")
    return VerificationResult(True)
