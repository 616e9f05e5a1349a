"""Certified deciders for König's Property, its weak form, bipartiteness and CP.

Each decider returns the verdict together with a witness that the ``core``
verifiers accept.  A search that runs out of budget raises
:class:`~hyperkonig.solvers.BudgetExceeded`; it never reports ``False``.
"""

from __future__ import annotations

import warnings
from collections import deque

from .core import (
    Bipartition,
    CoverSolution,
    ExactTransversal,
    Hypergraph,
    KonigCertificate,
    Matching,
    bits,
    verify_konig_certificate,
)
from .solvers import (
    DEFAULT_BUDGET,
    _Counter,
    bipartition,
    covering_number,
    exact_transversal,
    max_matching,
)


def has_konig(H: Hypergraph, budget: int = DEFAULT_BUDGET) -> tuple[bool, KonigCertificate | None]:
    """Decide König's Property (strict reading) by exhaustive search.

    A certificate is a matching plus one representative per matched edge,
    the representatives covering every edge.  The search takes the
    lowest-index edge not yet covered and branches over each of its vertices
    ``v`` outside the matched union and each edge ``e`` containing ``v`` that
    is disjoint from the current matching; ``e`` joins the matching with
    representative ``v``.  An uncovered edge lying entirely inside the
    matched union can never be covered and prunes the node.
    """
    counter = _Counter("has_konig", budget)
    masks = H.masks
    m = len(masks)
    containing: dict[int, list[int]] = {}
    for i, e in enumerate(masks):
        for v in bits(e):
            containing.setdefault(v, []).append(i)
    matched: list[int] = []
    reps: list[int] = []

    def search(union: int, cover: int) -> bool:
        counter.tick()
        target = None
        for e in masks:
            if not e & cover:
                if not e & ~union:
                    return False
                if target is None:
                    target = e
        if target is None:
            return True
        for v in bits(target & ~union):
            for i in containing[v]:
                e = masks[i]
                if e & union:
                    continue
                matched.append(i)
                reps.append(v)
                if search(union | e, cover | (1 << v)):
                    return True
                matched.pop()
                reps.pop()
        return False

    if not search(0, 0):
        return False, None
    cert = KonigCertificate(Matching(tuple(matched)), tuple(reps))
    assert verify_konig_certificate(H, cert), "has_konig produced an invalid certificate"
    return True, cert


def has_weak_konig(H: Hypergraph, budget: int = DEFAULT_BUDGET) -> tuple[bool, Matching, CoverSolution]:
    """True iff the maximum matching size equals the covering number."""
    size, matching, _ = max_matching(H, budget)
    cover, _ = covering_number(H, budget)
    return size == cover.nu, matching, cover


def is_bipartite(H: Hypergraph, budget: int = DEFAULT_BUDGET) -> tuple[bool, Bipartition | None]:
    b = bipartition(H, budget)
    return b is not None, b


def has_cp(H: Hypergraph, budget: int = DEFAULT_BUDGET) -> tuple[bool, ExactTransversal | None]:
    """Choosability property: some vertex set meets every edge exactly once.

    CP is normally stated for hypergraphs without singleton edges.  Singletons
    are accepted (they force their vertex into the choice) with a warning.
    """
    if any(len(e) == 1 for e in H.edges):
        warnings.warn("hypergraph has singleton edges; CP is defined for |e| > 1", stacklevel=2)
    t = exact_transversal(H, budget)
    return t is not None, t


def _require_graph(G: Hypergraph) -> None:
    if not G.is_graph():
        raise ValueError("non-graph input: every edge must have exactly 2 vertices")


def graph_konig_upgrade(G: Hypergraph, budget: int = DEFAULT_BUDGET) -> KonigCertificate | None:
    """Turn a maximum matching and minimum cover of equal size into a certificate.

    For a finite graph with ``|M| = nu``, every minimum cover meets every
    maximum-matching edge exactly once: each of the ``|M|`` disjoint edges
    needs a cover vertex, and there are only ``nu = |M|`` to go round.  So
    ``(M, C)`` is already a König certificate.  Returns ``None`` when
    ``|M| < nu``.
    """
    _require_graph(G)
    size, matching, _ = max_matching(G, budget)
    cover, _ = covering_number(G, budget)
    if size != cover.nu:
        return None
    cert = KonigCertificate(matching, cover.cover)
    check = verify_konig_certificate(G, cert)
    if not check:
        raise AssertionError(f"graph upgrade failed: {check.reason}")
    return cert


def odd_cycle(G: Hypergraph) -> list[int] | None:
    """Return the vertices of an odd cycle of ``G`` in order, or ``None``.

    BFS 2-colouring per component; the first edge joining two vertices of
    the same colour closes an odd cycle through their BFS tree paths.
    """
    _require_graph(G)
    n = G.vertex_count
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, w in G.edges:
        adj[u].append(w)
        adj[w].append(u)
    colour = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    for root in range(n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return _close_cycle(u, w, parent, depth)
    return None


def _close_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> list[int]:
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    # left ends at the common ancestor, right repeats it
    return left + right[-2::-1]
