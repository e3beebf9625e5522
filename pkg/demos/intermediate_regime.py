"""
Where N stays above w across a whole gap
========================================

For each dimension, list the gaps (v_k, v_{k+1}) with N(v_k) >= w(v_{k+1})
and compare the first stable k with the sufficient bound k > n^2/4 - n.
All decisions are exact integer comparisons.
"""

from sphereweyl import paper_bound, regime_report

print(f"{'n':>3} {'exceptional gaps':>18} {'threshold':>10} {'bound':>6}")
for n in range(1, 31):
    rep = regime_report(n, paper_bound(n) + 50)
    gaps = f"0..{rep.exceptional_set[-1]}" if rep.exceptional_set else "-"
    print(f"{n:>3} {gaps:>18} {rep.stable_threshold:>10} {rep.paper_bound:>6}")

# %%
# Larger dimensions: observed threshold, bound, and threshold / n^2.
for n in (10, 20, 40, 80):
    rep = regime_report(n, paper_bound(n))
    print(n, rep.stable_threshold, rep.paper_bound, round(rep.stable_threshold / n ** 2, 4))
