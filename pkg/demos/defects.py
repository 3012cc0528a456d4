"""
Radius-R defects along a path
=============================

Remove radius-R disks around the vertices; what is left of the polygon has
area D_R = (n - 2) pi - cosh(R) * (sum of vertex angles).  Growing sides in
the centered region never lowers it, and non-centered polygons stay above
the horocyclic polygon built from their short sides.
"""

import hypcyc

R = 0.3

# from a small equilateral triangle to a big one, through centered triangles
path = hypcyc.monotone_path((1.0, 1.0, 1.0), (2.4, 2.0, 2.0), steps=8)
for sides in path:
    print(" ".join(f"{x:.3f}" for x in sides), f"  D_R = {hypcyc.defect(sides, R):.8f}")

# the regular n-gon has a closed form
for n in range(3, 8):
    print(n, hypcyc.defect([1.0] * n, R))

# a non-centered quadrilateral against the horocyclic bound from its short sides
rest = (0.9, 1.1, 0.7)
d0 = 0.5 * (hypcyc.b0(rest) + hypcyc.h0(rest))
print("defect:", hypcyc.defect((d0,) + rest, R))
print("bound: ", hypcyc.defect_lower_bound_horocyclic(rest, R))
