"""Hypergraph data model, edge subfamilies and certificate verification.

Vertices are the dense integers ``0..n-1``.  Every edge is stored both as a
sorted tuple and as an integer bitmask, so intersection tests are a single
``&``.  All values here are immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class HypergraphError(ValueError):
    """Raised when an instance violates the hypergraph invariants."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> list[int]:
    """Vertex ids set in ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _sorted_unique(values: Iterable[int], what: str) -> tuple[int, ...]:
    vals = tuple(sorted(int(v) for v in values))
    if len(set(vals)) != len(vals):
        raise HypergraphError(f"duplicate {what}")
    return vals


@dataclass(frozen=True)
class Hypergraph:
    """A finite hypergraph ``(V, E)`` with ``V = {0, ..., vertex_count - 1}``.

    Construction canonicalizes: each edge becomes a sorted tuple, duplicate
    edges collapse, and the edge list is sorted lexicographically.  Empty
    edges and out-of-range vertex ids are rejected with
    :class:`HypergraphError`.
    """

    vertex_count: int
    edges: tuple[tuple[int, ...], ...] = ()
    labels: tuple[str, ...] | None = None
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = int(self.vertex_count)
        if n < 0:
            raise HypergraphError("negative vertex count")
        canon = set()
        for edge in self.edges:
            e = tuple(sorted(set(int(v) for v in edge)))
            if not e:
                raise HypergraphError("empty edge")
            for v in e:
                if v < 0 or v >= n:
                    raise HypergraphError(f"vertex {v} out of range")
            canon.add(e)
        edges = tuple(sorted(canon))
        labels = self.labels
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise HypergraphError("label count does not match vertex count")
        object.__setattr__(self, "vertex_count", n)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "masks", tuple(mask_of(e) for e in edges))

    @classmethod
    def _trusted(cls, vertex_count, edges, masks, labels=None) -> "Hypergraph":
        # skips validation; callers pass slices of an already canonical instance
        H = object.__new__(cls)
        object.__setattr__(H, "vertex_count", vertex_count)
        object.__setattr__(H, "edges", edges)
        object.__setattr__(H, "labels", labels)
        object.__setattr__(H, "masks", masks)
        return H

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def all_vertices(self) -> int:
        return (1 << self.vertex_count) - 1

    def is_graph(self) -> bool:
        """True when every edge has exactly two vertices."""
        return all(len(e) == 2 for e in self.edges)

    def __len__(self) -> int:
        return len(self.edges)


def new_hypergraph(
    vertex_count: int,
    edges: Iterable[Iterable[int]],
    labels: Sequence[str] | None = None,
) -> Hypergraph:
    """Build a validated, canonical hypergraph."""
    return Hypergraph(vertex_count, tuple(tuple(e) for e in edges), labels)


@dataclass(frozen=True)
class EdgeSubset:
    """Sorted set of edge indices into a host hypergraph (the family ``E_0``)."""

    indices: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", _sorted_unique(self.indices, "edge index"))

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)


@dataclass(frozen=True)
class Matching:
    """Sorted set of edge indices; the edges must be pairwise disjoint."""

    indices: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", _sorted_unique(self.indices, "edge index"))

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)


@dataclass(frozen=True)
class CoverSolution:
    cover: tuple[int, ...]
    nu: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "cover", _sorted_unique(self.cover, "vertex"))


@dataclass(frozen=True)
class KonigCertificate:
    """A matching together with one representative vertex per matched edge.

    The representatives form the cover.  Under the strict reading used in
    this package the cover may not contain anything else.
    """

    matching: Matching
    cover: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.matching, Matching):
            object.__setattr__(self, "matching", Matching(tuple(self.matching)))
        object.__setattr__(self, "cover", _sorted_unique(self.cover, "vertex"))


@dataclass(frozen=True)
class Bipartition:
    side: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "side", _sorted_unique(self.side, "vertex"))


@dataclass(frozen=True)
class ExactTransversal:
    choice: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "choice", _sorted_unique(self.choice, "vertex"))


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verifier.  Truthy iff the check passed.

    ``reason`` names the first invariant that broke, e.g. ``"not_disjoint"``.
    """

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


PASS = Verdict(True)


def induced(H: Hypergraph, subset: EdgeSubset | Iterable[int]) -> tuple[Hypergraph, tuple[int, ...]]:
    """Sub-hypergraph on the same vertex set keeping only ``subset``'s edges.

    Returns the new hypergraph and, for each of its edges, the index of the
    corresponding edge in ``H``.
    """
    if not isinstance(subset, EdgeSubset):
        subset = EdgeSubset(tuple(subset))
    for i in subset.indices:
        if i < 0 or i >= H.edge_count:
            raise IndexError(f"edge index {i} out of range")
    # H's edges are already canonical, so a sorted index selection stays canonical
    idx = subset.indices
    sub = Hypergraph._trusted(
        H.vertex_count, tuple(H.edges[i] for i in idx), tuple(H.masks[i] for i in idx), H.labels
    )
    return sub, subset.indices


def _vertex_mask(H: Hypergraph, vertices: Iterable[int]) -> int | None:
    m = 0
    for v in vertices:
        if v < 0 or v >= H.vertex_count:
            return None
        m |= 1 << v
    return m


def verify_matching(H: Hypergraph, M: Matching | Iterable[int]) -> Verdict:
    indices = M.indices if isinstance(M, Matching) else tuple(M)
    if len(set(indices)) != len(indices):
        return Verdict(False, "duplicate_index")
    used = 0
    for i in indices:
        if not 0 <= i < H.edge_count:
            return Verdict(False, "index_out_of_range")
        if used & H.masks[i]:
            return Verdict(False, "not_disjoint")
        used |= H.masks[i]
    return PASS


def verify_cover(H: Hypergraph, C: Iterable[int]) -> Verdict:
    cm = _vertex_mask(H, C)
    if cm is None:
        return Verdict(False, "vertex_out_of_range")
    for e in H.masks:
        if not e & cm:
            return Verdict(False, "edge_not_covered")
    return PASS


def verify_konig_certificate(H: Hypergraph, cert: KonigCertificate) -> Verdict:
    """Check a certificate against ``H`` under the strict reading.

    The matching must be valid, the cover must hit every edge, hit every
    matched edge exactly once, and lie inside the union of matched edges.
    """
    v = verify_matching(H, cert.matching)
    if not v:
        return v
    cm = _vertex_mask(H, cert.cover)
    if cm is None:
        return Verdict(False, "vertex_out_of_range")
    if not verify_cover(H, cert.cover):
        return Verdict(False, "cover_misses_edge")
    union = 0
    for i in cert.matching.indices:
        if (H.masks[i] & cm).bit_count() != 1:
            return Verdict(False, "matched_edge_not_hit_once")
        union |= H.masks[i]
    if cm & ~union:
        return Verdict(False, "cover_outside_matching")
    return PASS


def verify_cover_solution(H: Hypergraph, sol: CoverSolution) -> Verdict:
    """Cover validity plus ``nu == |cover|``; optimality is not checked here."""
    v = verify_cover(H, sol.cover)
    if not v:
        return v
    if sol.nu != len(sol.cover):
        return Verdict(False, "nu_mismatch")
    return PASS


def verify_bipartition(H: Hypergraph, B: Bipartition | Iterable[int]) -> Verdict:
    side = B.side if isinstance(B, Bipartition) else tuple(B)
    d = _vertex_mask(H, side)
    if d is None:
        return Verdict(False, "vertex_out_of_range")
    rest = H.all_vertices & ~d
    for e in H.masks:
        if e.bit_count() > 1 and (not e & d or not e & rest):
            return Verdict(False, "monochromatic_edge")
    return PASS


def verify_exact_transversal(H: Hypergraph, T: ExactTransversal | Iterable[int]) -> Verdict:
    choice = T.choice if isinstance(T, ExactTransversal) else tuple(T)
    c = _vertex_mask(H, choice)
    if c is None:
        return Verdict(False, "vertex_out_of_range")
    for e in H.masks:
        if (e & c).bit_count() != 1:
            return Verdict(False, "edge_not_hit_once")
    return PASS
