"""Finite versions of the example families, small graphs, and random instances.

Each family truncates an infinite construction to an ``n``-element universe.
The regimes in which the infinite behaviour shows up at finite size:

``cofinite_family(n, k)``
    Edges are the subsets whose complement has at most ``k`` points.  Any
    ``r`` edges with ``r * k < n`` share a common vertex (their complements
    cannot exhaust the universe), so small subfamilies have a one-vertex
    cover.  The whole family has covering number ``k + 1`` while any two
    edges intersect once ``2k < n``, so the maximum matching is 1.

``large_subsets_family(n, m)``
    Edges are the subsets of size at least ``m``.  Fewer than ``m`` edges
    are split by their minima; once ``n >= 2m - 1`` one side of any
    split holds ``m`` points, so the whole family is not bipartite.

``affine_lines_family(p)``
    Lines of the affine plane over the ``p``-element field: any two meet in at
    most one point, the finite stand-in for an almost disjoint family.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

import numpy as np

from .core import Hypergraph, HypergraphError

#: Recorded alongside generated random instances; same seed + same algorithm
#: gives the same hypergraph.
RNG_ALGORITHM = f"numpy.random.Generator(PCG64) numpy-{np.__version__}"


def cofinite_family(n: int, k: int) -> Hypergraph:
    if n < 1 or k < 0:
        raise HypergraphError("cofinite_family needs n >= 1 and k >= 0")
    if k >= n:
        raise HypergraphError("cofinite_family needs k < n")
    universe = range(n)
    edges = []
    for size in range(k + 1):
        for missing in combinations(universe, size):
            gone = set(missing)
            edges.append(tuple(v for v in universe if v not in gone))
    return Hypergraph(n, tuple(edges))


def large_subsets_family(n: int, m: int) -> Hypergraph:
    if not 1 <= m <= n:
        raise HypergraphError("large_subsets_family needs 1 <= m <= n")
    edges = [c for size in range(m, n + 1) for c in combinations(range(n), size)]
    return Hypergraph(n, tuple(edges))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def affine_lines_family(p: int) -> Hypergraph:
    """All ``p**2 + p`` lines of AG(2, p); point ``(x, y)`` has index ``x * p + y``."""
    if not _is_prime(p):
        raise HypergraphError(f"{p} is not prime")
    if p > 13:
        raise HypergraphError("affine_lines_family is limited to p <= 13")
    lines = []
    for slope in range(p):
        for icpt in range(p):
            lines.append(tuple(x * p + (slope * x + icpt) % p for x in range(p)))
    for x in range(p):
        lines.append(tuple(x * p + y for y in range(p)))
    return Hypergraph(p * p, tuple(lines))


def complete_graph(n: int) -> Hypergraph:
    if n < 1:
        raise HypergraphError("complete_graph needs n >= 1")
    return Hypergraph(n, tuple(combinations(range(n), 2)))


def cycle_graph(n: int) -> Hypergraph:
    if n < 3:
        raise HypergraphError("cycle_graph needs n >= 3")
    return Hypergraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Hypergraph:
    if n < 1:
        raise HypergraphError("path_graph needs n >= 1")
    return Hypergraph(n, tuple((i, i + 1) for i in range(n - 1)))


def random_hypergraph(n: int, m_edges: int, max_arity: int, seed: int) -> Hypergraph:
    """``m_edges`` distinct random edges on ``n`` vertices, each of size ``<= max_arity``.

    Edge sizes are uniform on ``1..min(max_arity, n)``, vertices are drawn
    without replacement, and repeated edges are rejected.  Uses a PCG64
    stream seeded with ``seed`` (see :data:`RNG_ALGORITHM`).
    """
    if max_arity < 1:
        raise HypergraphError("max_arity must be >= 1")
    if n < 0 or m_edges < 0:
        raise HypergraphError("n and m_edges must be non-negative")
    top = min(max_arity, n)
    available = sum(comb(n, i) for i in range(1, top + 1))
    if m_edges > available:
        raise HypergraphError(
            f"only {available} distinct edges of size <= {max_arity} on {n} vertices, asked for {m_edges}"
        )
    rng = np.random.Generator(np.random.PCG64(seed))
    seen: set[tuple[int, ...]] = set()
    edges: list[tuple[int, ...]] = []
    while len(edges) < m_edges:
        size = int(rng.integers(1, top + 1))
        e = tuple(sorted(int(v) for v in rng.choice(n, size=size, replace=False)))
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return Hypergraph(n, tuple(edges))
