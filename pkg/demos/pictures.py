"""
Drawing cyclic and horocyclic polygons
======================================

Place a polygon with its center at the origin of the Poincare disk, or on
the horocycle y = 1 of the upper half-plane, and save the pictures as SVG.
"""

import pathlib
import tempfile

import hypcyc
from hypcyc.embedding import side_lengths

out = pathlib.Path(tempfile.mkdtemp())

# a centered pentagon in the disk; the sides come back from the vertices
pentagon = hypcyc.embed((1.0, 1.4, 0.9, 1.2, 1.6), model="disk")
print(pentagon.vertices)
print(side_lengths(pentagon))
(out / "pentagon.svg").write_bytes(hypcyc.emit(pentagon, "svg"))

# a non-centered triangle: every vertex sits in one half of the circle
triangle = hypcyc.embed((2.0, 1.0, 1.5), model="uhp")
(out / "triangle.svg").write_bytes(hypcyc.emit(triangle, "svg"))

# a horocyclic quadrilateral: three short sides and the long one at h0
horo = hypcyc.embed_horocyclic((1.0, 0.6, 1.3))
print(horo.vertices)
(out / "horocyclic.svg").write_bytes(hypcyc.emit(horo, "svg"))

print(hypcyc.emit(pentagon, "json").decode())
print("pictures in", out)
