"""Small subfamilies have König's Property, the whole family does not.

Edges of cofinite_family(12, 1) are the full 12-set and its eleven-point
subsets.  Any five of them share a vertex x, so one edge with representative
x is a certificate.  All 13 together pairwise intersect (matching size 1) but
need two cover vertices.
"""

from hyperkonig import cofinite_family, covering_number, explore, has_konig, induced, max_matching

H = cofinite_family(12, 1)
print(f"{H.edge_count} edges on {H.vertex_count} vertices")

sub, _ = induced(H, (1, 4, 7, 9, 12))
ok, cert = has_konig(sub)
print("a 5-edge subfamily:", ok, "certificate", cert)

print("whole family: max matching", max_matching(H)[0], " covering number", covering_number(H)[0].nu)

report = explore(H, "konig", max_subset_size=5)
for key, value in report.to_dict().items():
    print(f"  {key}: {value}")
