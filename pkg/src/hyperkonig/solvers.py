"""Exact solvers: maximum matching, covering number, bipartition, exact transversal.

Every solver is a complete depth-first search with deterministic branching
(lowest edge index first, then ascending vertex id).  Among optimal witnesses
the first one reached in that order is returned, so a witness is
lexicographically least with respect to the branching order only; it is not a
globally canonical optimum.

Each search counts nodes.  When the count passes ``budget`` the solver raises
:class:`BudgetExceeded` instead of returning a possibly non-optimal answer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .core import (
    Bipartition,
    CoverSolution,
    ExactTransversal,
    Hypergraph,
    Matching,
    bits,
)

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """A search hit its node cap before it could prove its answer."""

    def __init__(self, solver: str, budget: int):
        super().__init__(f"{solver}: budget exceeded after {budget} nodes")
        self.solver = solver
        self.budget = budget


@dataclass(frozen=True)
class SolveStats:
    nodes_explored: int
    elapsed_ms: int
    optimum_proved: bool = True


class _Counter:
    __slots__ = ("name", "budget", "nodes", "t0")

    def __init__(self, name: str, budget: int):
        self.name = name
        self.budget = budget
        self.nodes = 0
        self.t0 = time.perf_counter()

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.name, self.budget)

    def stats(self) -> SolveStats:
        ms = int((time.perf_counter() - self.t0) * 1000)
        return SolveStats(self.nodes, ms, True)


def _greedy_packing(masks, allowed: int = -1) -> int:
    """Size of a greedy family of pairwise disjoint masks (all inside ``allowed``)."""
    used = 0
    count = 0
    for m in masks:
        m &= allowed
        if m and not m & used:
            used |= m
            count += 1
    return count


# ---------------------------------------------------------------- matching


def max_matching(H: Hypergraph, budget: int = DEFAULT_BUDGET) -> tuple[int, Matching, SolveStats]:
    """Maximum set packing of the edges of ``H``.

    Branch and bound over edge inclusion.  The include branch is explored
    first, so the first leaf is the greedy packing in index order, which also
    serves as the initial lower bound.  The upper bound at a node is the
    smaller of the number of still-available edges and the number of free
    vertices they span divided by the smallest available edge size.
    """
    counter = _Counter("max_matching", budget)
    masks = H.masks
    m = len(masks)
    sizes = [e.bit_count() for e in masks]
    best: list[int] = []
    chosen: list[int] = []

    def upper_bound(start: int, used: int) -> int:
        avail = 0
        span = 0
        smallest = None
        for j in range(start, m):
            e = masks[j]
            if not e & used:
                avail += 1
                span |= e
                if smallest is None or sizes[j] < smallest:
                    smallest = sizes[j]
        if not avail:
            return 0
        return min(avail, span.bit_count() // smallest)

    def search(j: int, used: int) -> None:
        nonlocal best
        # the exclude branch is the loop continuation, so depth <= matching size
        while True:
            counter.tick()
            while j < m and masks[j] & used:
                j += 1
            if j == m:
                if len(chosen) > len(best):
                    best = chosen.copy()
                return
            if len(chosen) + upper_bound(j, used) <= len(best):
                return
            chosen.append(j)
            search(j + 1, used | masks[j])
            chosen.pop()
            j += 1

    search(0, 0)
    return len(best), Matching(tuple(best)), counter.stats()


# ---------------------------------------------------------------- cover


def covering_number(H: Hypergraph, budget: int = DEFAULT_BUDGET) -> tuple[CoverSolution, SolveStats]:
    """Minimum vertex cover (hitting set) of ``H``.

    Branches on the lowest-index edge not yet hit: its k-th vertex is taken
    and its first k-1 vertices are forbidden from then on, so each cover is
    generated once.  The lower bound is the size of a greedy disjoint packing
    of the unhit edges restricted to non-forbidden vertices.
    """
    counter = _Counter("covering_number", budget)
    masks = H.masks
    m = len(masks)
    best: list[int] | None = None
    chosen: list[int] = []

    def search(cover: int, forbidden: int) -> None:
        nonlocal best
        counter.tick()
        allowed = ~forbidden
        unhit = []
        for j in range(m):
            e = masks[j]
            if not e & cover:
                if not e & allowed:
                    return
                unhit.append(e)
        if not unhit:
            if best is None or len(chosen) < len(best):
                best = chosen.copy()
            return
        if best is not None and len(chosen) + _greedy_packing(unhit, allowed) >= len(best):
            return
        blocked = forbidden
        for v in bits(unhit[0] & allowed):
            chosen.append(v)
            search(cover | (1 << v), blocked)
            chosen.pop()
            blocked |= 1 << v

    search(0, 0)
    assert best is not None
    cover = tuple(sorted(best))
    return CoverSolution(cover, len(cover)), counter.stats()


# ---------------------------------------------------------------- bipartition


def bipartition(H: Hypergraph, budget: int = DEFAULT_BUDGET) -> Bipartition | None:
    """Find ``D`` such that ``D`` and its complement both meet every edge of size > 1.

    Backtracking over vertex sides with unit propagation: once an edge has a
    single unassigned vertex and all its assigned vertices share a side, the
    last vertex is forced to the other side.  Vertices lying in no edge of
    size > 1 are left out of ``D``.  The first constrained vertex is only
    tried inside ``D`` because complementing a solution gives another one.
    """
    counter = _Counter("bipartition", budget)
    edges = [e for e in H.masks if e.bit_count() > 1]
    constrained = 0
    for e in edges:
        constrained |= e
    order = bits(constrained)

    def propagate(ind: int, outd: int) -> tuple[int, int] | None:
        changed = True
        while changed:
            changed = False
            for e in edges:
                a = e & ind
                b = e & outd
                if a == e or b == e:
                    return None
                free = e & ~(ind | outd)
                if free and not free & (free - 1):
                    if not b:
                        outd |= free
                        changed = True
                    elif not a:
                        ind |= free
                        changed = True
        return ind, outd

    def search(ind: int, outd: int, first: bool) -> int | None:
        counter.tick()
        state = propagate(ind, outd)
        if state is None:
            return None
        ind, outd = state
        assigned = ind | outd
        for v in order:
            if not assigned >> v & 1:
                break
        else:
            return ind
        bit = 1 << v
        found = search(ind | bit, outd, False)
        if found is not None or first:
            return found
        return search(ind, outd | bit, False)

    d = search(0, 0, True)
    if d is None:
        return None
    return Bipartition(tuple(bits(d)))


# ---------------------------------------------------------------- exact transversal


def exact_transversal(H: Hypergraph, budget: int = DEFAULT_BUDGET) -> ExactTransversal | None:
    """Find a vertex set meeting every edge in exactly one vertex.

    Picks the lowest-index edge with no chosen vertex and branches on which of
    its vertices is chosen (ascending).  Choosing ``v`` forbids every vertex
    sharing an edge with ``v``, which keeps each edge at most singly hit; the
    vertices tried earlier in the same edge are forbidden in later branches.
    An unhit edge whose vertices are all forbidden prunes the node.
    """
    counter = _Counter("exact_transversal", budget)
    masks = H.masks
    n = H.vertex_count
    neighbourhood = [0] * n
    for e in masks:
        for v in bits(e):
            neighbourhood[v] |= e

    def search(chosen: int, forbidden: int) -> int | None:
        counter.tick()
        target = None
        for e in masks:
            if not e & chosen:
                if not e & ~forbidden:
                    return None
                if target is None:
                    target = e
        if target is None:
            return chosen
        blocked = forbidden
        for v in bits(target & ~forbidden):
            found = search(chosen | (1 << v), blocked | neighbourhood[v])
            if found is not None:
                return found
            blocked |= 1 << v
        return None

    c = search(0, 0)
    if c is None:
        return None
    return ExactTransversal(tuple(bits(c)))
