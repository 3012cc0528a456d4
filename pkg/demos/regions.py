"""
Which side lengths close up on a circle
========================================

Fix all sides but one and let the last one grow.  The polygon is centered
until the long side reaches b0, its center then slips outside, and at h0
the circle becomes a horocycle.
"""

import numpy as np

import hypcyc

rest = (1.0, 1.2, 0.8)

# the two thresholds only depend on the other sides
b0 = hypcyc.b0(rest)
h0 = hypcyc.h0(rest)
print(f"b0 = {b0:.6f}   h0 = {h0:.6f}")

# walk the long side up past h0 and watch the class and the radius
for d0 in np.linspace(1.2, h0 + 0.2, 12):
    sides = (d0,) + rest
    cls = hypcyc.classify(sides)
    J = hypcyc.radius(sides).J if cls.kind in (hypcyc.Kind.CENTERED, hypcyc.Kind.NON_CENTERED) else None
    print(f"d0 = {d0:8.4f}  {str(cls):>18}  J = {'-' if J is None else f'{J:.6f}'}")

# exactly at b0 the long side passes through the center, so J = b0 / 2
print(hypcyc.radius((b0,) + rest))

# rotations and reflections give the same polygon
print(hypcyc.canonicalize((0.8, 1.0, 1.2, 1.9)))
print(hypcyc.congruent((0.8, 1.0, 1.2, 1.9), (1.9, 1.2, 1.0, 0.8)))
