"""
Certified crossings
===================

Past the threshold, w passes through every level N(v_k) strictly inside the
gap. Bisection with exact squared comparisons pins the crossing point to any
width.
"""

from fractions import Fraction

from sphereweyl import crossing_count, crossing_in_interval
from sphereweyl.weyl_compare import verify_crossing

rec = crossing_in_interval(7, 10, Fraction(1, 10 ** 30))
print(rec.k, rec.lower, rec.upper, rec.level)
print("enclosure:", float(rec.enclosure_lo), "width:", float(rec.width))
print("independently verified:", verify_crossing(7, rec, Fraction(1, 10 ** 30)))

# %%
# Counting crossings up to k = 60 on a few spheres.
for n in (2, 5, 10, 15):
    count, records = crossing_count(n, 60)
    print(f"S^{n}: {count} crossings, first in gap k={records[0].k}")
