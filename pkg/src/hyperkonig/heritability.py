"""Testing a property on small edge subfamilies against the whole family.

:func:`explore` runs the "every finite subfamily has it, does the whole
family?" experiment at desk scale.  The ``*_core`` functions extract a small
subfamily that already witnesses a failure, by greedy single-edge deletion.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterator, Sequence

import numpy as np

from . import properties, solvers
from .core import EdgeSubset, Hypergraph, induced

DEFAULT_EXPLORE_BUDGET = 100_000


class Property(str, enum.Enum):
    KONIG = "konig"
    WEAK_KONIG = "weak_konig"
    BIPARTITE = "bipartite"
    CP = "cp"

    @classmethod
    def parse(cls, name: "str | Property") -> "Property":
        if isinstance(name, Property):
            return name
        return cls(name.replace("-", "_").lower())


def decide(H: Hypergraph, prop: Property | str, budget: int = solvers.DEFAULT_BUDGET) -> bool:
    """Plain yes/no for ``prop`` on ``H`` (witnesses discarded)."""
    prop = Property.parse(prop)
    if prop is Property.KONIG:
        return properties.has_konig(H, budget)[0]
    if prop is Property.WEAK_KONIG:
        return properties.has_weak_konig(H, budget)[0]
    if prop is Property.BIPARTITE:
        return solvers.bipartition(H, budget) is not None
    # the singleton warning of has_cp is noise when scanning thousands of subfamilies
    return solvers.exact_transversal(H, budget) is not None


@dataclass(frozen=True)
class HeritabilityReport:
    property: Property
    max_subset_size: int
    mode: str  # "exhaustive" | "sampled"
    subsets_checked: int
    all_small_hold: bool
    smallest_failing_subset: EdgeSubset | None
    whole_holds: bool
    seed: int | None = None
    # per-subset verdicts in enumeration order, exhaustive mode only
    outcomes: tuple[bool, ...] | None = field(default=None, repr=False, compare=False)

    def to_dict(self) -> dict:
        failing = self.smallest_failing_subset
        return {
            "property": self.property.value,
            "max_subset_size": self.max_subset_size,
            "mode": self.mode,
            "subsets_checked": self.subsets_checked,
            "all_small_hold": self.all_small_hold,
            "smallest_failing_subset": None if failing is None else list(failing.indices),
            "whole_holds": self.whole_holds,
            "seed": self.seed,
        }


def count_subsets(m: int, s: int) -> int:
    """Number of edge subsets of size ``0..s`` out of ``m`` edges."""
    return sum(comb(m, k) for k in range(min(s, m) + 1))


def enumerate_subsets(m: int, s: int) -> Iterator[tuple[int, ...]]:
    """Subsets of ``range(m)`` of size ``<= s``, by size and then lexicographically."""
    for k in range(min(s, m) + 1):
        yield from combinations(range(m), k)


def _subset_key(t: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return len(t), t


def sample_subsets(m: int, s: int, count: int, seed: int) -> list[tuple[int, ...]]:
    """``count`` distinct subsets of size ``<= s``, uniform over that collection.

    A size ``k`` is drawn with probability proportional to ``C(m, k)``, then a
    uniform ``k``-subset; duplicates are rejected.  Returned in enumeration
    order.
    """
    top = min(s, m)
    total = count_subsets(m, s)
    if count > total:
        raise ValueError("cannot sample more subsets than exist")
    weights = np.array([comb(m, k) for k in range(top + 1)], dtype=float)
    weights /= weights.sum()
    rng = np.random.Generator(np.random.PCG64(seed))
    seen: set[tuple[int, ...]] = set()
    while len(seen) < count:
        k = int(rng.choice(top + 1, p=weights))
        t = tuple(sorted(int(i) for i in rng.choice(m, size=k, replace=False)))
        seen.add(t)
    return sorted(seen, key=_subset_key)


def _check_one(args: tuple[Hypergraph, Property, tuple[int, ...], int]) -> bool:
    H, prop, subset, budget = args
    sub, _ = induced(H, subset)
    return decide(sub, prop, budget)


def explore(
    H: Hypergraph,
    prop: Property | str,
    max_subset_size: int,
    budget: int = DEFAULT_EXPLORE_BUDGET,
    seed: int | None = None,
    *,
    solver_budget: int = solvers.DEFAULT_BUDGET,
    workers: int = 1,
) -> HeritabilityReport:
    """Check ``prop`` on edge subfamilies of size ``<= max_subset_size`` and on ``H``.

    If there are at most ``budget`` such subfamilies, all of them are
    checked; otherwise ``budget`` of them are sampled with the seeded
    generator (``seed`` defaults to 0 in that case).  ``workers > 1`` fans
    the checks out over processes; results are gathered in enumeration
    order so the report does not depend on it.
    """
    prop = Property.parse(prop)
    if max_subset_size < 0:
        raise ValueError("max_subset_size must be >= 0")
    m = H.edge_count
    total = count_subsets(m, max_subset_size)
    if total <= budget:
        mode = "exhaustive"
        subsets: Sequence[tuple[int, ...]] = list(enumerate_subsets(m, max_subset_size))
        used_seed = None
    else:
        mode = "sampled"
        used_seed = 0 if seed is None else seed
        subsets = sample_subsets(m, max_subset_size, budget, used_seed)

    jobs = [(H, prop, t, solver_budget) for t in subsets]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = tuple(pool.map(_check_one, jobs, chunksize=64))
    else:
        outcomes = tuple(map(_check_one, jobs))

    failing = next((t for t, ok in zip(subsets, outcomes) if not ok), None)
    return HeritabilityReport(
        property=prop,
        max_subset_size=max_subset_size,
        mode=mode,
        subsets_checked=len(subsets),
        all_small_hold=failing is None,
        smallest_failing_subset=None if failing is None else EdgeSubset(failing),
        whole_holds=decide(H, prop, solver_budget),
        seed=used_seed,
        outcomes=outcomes if mode == "exhaustive" else None,
    )


def restrict_report(report: HeritabilityReport, m: int, smaller: int) -> HeritabilityReport:
    """Re-derive the report for a smaller subset size from an exhaustive run's verdicts.

    ``m`` is the edge count of the hypergraph the report was computed on.
    """
    if report.mode != "exhaustive" or report.outcomes is None:
        raise ValueError("only exhaustive reports carry per-subset verdicts")
    if smaller > report.max_subset_size:
        raise ValueError("can only restrict to a smaller subset size")
    keep = count_subsets(m, smaller)
    subsets = list(enumerate_subsets(m, smaller))
    outcomes = report.outcomes[:keep]
    failing = next((t for t, ok in zip(subsets, outcomes) if not ok), None)
    return HeritabilityReport(
        property=report.property,
        max_subset_size=smaller,
        mode="exhaustive",
        subsets_checked=keep,
        all_small_hold=failing is None,
        smallest_failing_subset=None if failing is None else EdgeSubset(failing),
        whole_holds=report.whole_holds,
        seed=None,
        outcomes=outcomes,
    )


# ---------------------------------------------------------------- cores


def shrink(H: Hypergraph, still_bad: Callable[[Hypergraph], bool]) -> EdgeSubset:
    """Greedy single-edge deletion in index order.

    Assumes ``still_bad(H)`` holds and that ``still_bad`` is preserved under
    adding edges.  Then one pass leaves a set where removing any single edge
    makes ``still_bad`` false.
    """
    keep = list(range(H.edge_count))
    for i in range(H.edge_count):
        trial = [j for j in keep if j != i]
        if still_bad(induced(H, trial)[0]):
            keep = trial
    return EdgeSubset(tuple(keep))


def minimal_nonbipartite_core(H: Hypergraph, budget: int = solvers.DEFAULT_BUDGET) -> EdgeSubset | None:
    """A 1-minimal non-bipartite subfamily of ``H``, or ``None`` if ``H`` is bipartite."""
    def bad(G: Hypergraph) -> bool:
        return solvers.bipartition(G, budget) is None

    if not bad(H):
        return None
    return shrink(H, bad)


def minimal_non_cp_core(H: Hypergraph, budget: int = solvers.DEFAULT_BUDGET) -> EdgeSubset | None:
    """A 1-minimal subfamily with no exact transversal, or ``None`` if ``H`` has CP."""
    def bad(G: Hypergraph) -> bool:
        return solvers.exact_transversal(G, budget) is None

    if not bad(H):
        return None
    return shrink(H, bad)


def cover_critical_core(H: Hypergraph, budget: int = solvers.DEFAULT_BUDGET) -> EdgeSubset:
    """A 1-minimal subfamily whose covering number equals that of ``H``.

    The covering number never grows when edges are removed, so keeping it at
    the full value is preserved under adding edges back.
    """
    target = solvers.covering_number(H, budget)[0].nu

    def keeps_nu(G: Hypergraph) -> bool:
        return solvers.covering_number(G, budget)[0].nu == target

    return shrink(H, keeps_nu)
