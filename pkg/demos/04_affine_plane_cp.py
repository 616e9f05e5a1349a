"""Exact transversals on the lines of AG(2, 3).

Any two lines meet in at most one point.  Three lines always have private
points, so small subfamilies have CP.  All twelve lines would need a 3-point
transversal (12 lines, each point on 4 of them), but any two points are
collinear, so some line would be hit twice.
"""

from hyperkonig import affine_lines_family, explore, has_cp, induced, minimal_non_cp_core

A = affine_lines_family(3)
print(f"{A.edge_count} lines on {A.vertex_count} points")
print("three lines:", has_cp(induced(A, (0, 5, 10))[0]))
print("all lines:", has_cp(A))

print(explore(A, "cp", max_subset_size=3).to_dict())

core = minimal_non_cp_core(A)
print("1-minimal subfamily without CP:", [A.edges[i] for i in core])
