"""Exact deciders for König-type properties of finite hypergraphs."""

from .core import (
    Bipartition,
    CoverSolution,
    EdgeSubset,
    ExactTransversal,
    Hypergraph,
    HypergraphError,
    KonigCertificate,
    Matching,
    Verdict,
    induced,
    new_hypergraph,
    verify_bipartition,
    verify_cover,
    verify_exact_transversal,
    verify_konig_certificate,
    verify_matching,
)
from .generators import (
    affine_lines_family,
    cofinite_family,
    complete_graph,
    cycle_graph,
    large_subsets_family,
    path_graph,
    random_hypergraph,
)
from .heritability import (
    HeritabilityReport,
    Property,
    cover_critical_core,
    explore,
    minimal_non_cp_core,
    minimal_nonbipartite_core,
)
from .properties import (
    graph_konig_upgrade,
    has_cp,
    has_konig,
    has_weak_konig,
    is_bipartite,
    odd_cycle,
)
from .solvers import (
    BudgetExceeded,
    SolveStats,
    bipartition,
    covering_number,
    exact_transversal,
    max_matching,
)

__version__ = "0.1.0"
