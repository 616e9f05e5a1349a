"""Bipartiteness of large_subsets_family(8, 4): every 3 edges yes, all 163 no.

With fewer than 4 edges the set of edge minima meets every edge, and its
complement still holds at least one point of each edge.  With all edges, one
side of any split has 4 points and so contains a whole edge.

The exhaustive pass visits 721,928 subfamilies and takes about half a minute;
set WORKERS to spread it across processes.
"""

import time

from hyperkonig import explore, large_subsets_family, minimal_nonbipartite_core, verify_bipartition, induced

WORKERS = 1

H = large_subsets_family(8, 4)
idx = (3, 60, 140)
sub, _ = induced(H, idx)
minima = sorted({min(H.edges[i]) for i in idx})
print("edges", [H.edges[i] for i in idx], "minima", minima, "->", bool(verify_bipartition(sub, minima)))

t0 = time.perf_counter()
report = explore(H, "bipartite", max_subset_size=3, budget=10**6, workers=WORKERS)
print(report.to_dict(), f"{time.perf_counter() - t0:.1f}s")

core = minimal_nonbipartite_core(H)
print(f"1-minimal non-bipartite core: {len(core)} edges")
