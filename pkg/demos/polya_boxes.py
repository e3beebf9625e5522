"""
Rectangular boxes: the tiling baseline
======================================

Dirichlet eigenvalues of a box are pi^2 * sum(m_i^2 / a_i^2). Here N <= w at
every eigenvalue, with equality at every node of the unit interval.
"""

from sphereweyl.box_baseline import BoxDomain, box_nodes, box_polya_check, box_weyl_decimal

for sides, q_max in [([1], 100), ([1, 1], 100), ([1, 2], 50), ([1, 1, 1], 50)]:
    box = BoxDomain(sides)
    print(sides, "N <= w:", box_polya_check(box, q_max), " N < w:", box_polya_check(box, q_max, strict=True))

# %%
square = BoxDomain([1, 1])
for q, count in box_nodes(square, 30):
    print(f"q={q}: N={count}  w={box_weyl_decimal(square, q, 4)}")
