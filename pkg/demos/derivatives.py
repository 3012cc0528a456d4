"""
Derivatives with respect to the sides
=====================================

The radius, the angles and the defect are all differentiable in the side
lengths.  Here the analytic partials are compared with central differences.
"""

import numpy as np

import hypcyc

sides = np.array([1.0, 1.4, 0.9, 1.2, 1.6])
R = 0.25
jac = hypcyc.jacobian(sides, R)
print("dJ/dd     ", jac.dJ)
print("dD_R/dd   ", jac.dDefect)

# the same numbers from the solver alone
h = 1e-5
fd = []
for j in range(len(sides)):
    e = np.zeros(len(sides))
    e[j] = h
    fd.append((hypcyc.radius(sides + e).J - hypcyc.radius(sides - e).J) / (2 * h))
print("central   ", np.array(fd))

# longer sides move the radius more
print(np.argsort(sides) == np.argsort(jac.dJ))

# on the centered boundary the long side's angle derivatives come in two
# one-sided versions of opposite sign
b0 = hypcyc.b0((1.0, 1.0))
edge = hypcyc.jacobian((b0, 1.0, 1.0), R)
print(edge.dJ)
for side, (da, _) in edge.one_sided.items():
    print(side, da[0])
