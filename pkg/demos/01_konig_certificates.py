"""König's Property on small graphs and hypergraphs.

A certificate is a matching plus one representative vertex per matched edge,
the representatives covering every edge.  Run: python demos/01_konig_certificates.py
"""

from hyperkonig import (
    complete_graph,
    covering_number,
    cycle_graph,
    graph_konig_upgrade,
    has_konig,
    has_weak_konig,
    is_bipartite,
    max_matching,
    new_hypergraph,
)

# The 4-cycle: matching {0,1},{2,3} with representatives 0 and 2.
C4 = cycle_graph(4)
ok, cert = has_konig(C4)
print("C4 has Konig's Property:", ok)
print("  matched edges:", [C4.edges[i] for i in cert.matching])
print("  cover:", cert.cover)

# K4: a maximum matching has 2 edges but every cover needs 3 vertices,
# so even the weak property fails.
K4 = complete_graph(4)
print("\nK4 max matching:", max_matching(K4)[0], " covering number:", covering_number(K4)[0].nu)
print("K4 weak Konig:", has_weak_konig(K4)[0])

# For graphs a maximum matching and a minimum cover of equal size already
# form a certificate.
print("\nC4 upgrade:", graph_konig_upgrade(C4))
print("C5 upgrade:", graph_konig_upgrade(cycle_graph(5)))

# Three disjoint pairs a_i b_i plus a triangle on the a_i: the a_i are a
# certificate cover, yet the triangle rules out any 2-colouring.
H = new_hypergraph(6, [{0, 3}, {1, 4}, {2, 5}, {0, 1}, {1, 2}, {0, 2}])
print("\ntriangle-with-pendants: Konig", has_konig(H)[0], " bipartite", is_bipartite(H)[0])
