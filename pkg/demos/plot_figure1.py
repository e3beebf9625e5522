"""
Counting function against the Weyl function on S^2 and S^15
===========================================================

Left: on S^2 the Weyl function is the line w(x) = x and the counting
function N jumps over it at every eigenvalue. Right: on S^15 the steps stay
above w for the first 26 gaps before the crossings start.

Needs matplotlib (not a package dependency).
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from sphereweyl import counting_closed_form, regime_report
from sphereweyl.weyl_compare import weyl_value

# %%
# Step data straight from the exact closed form.


def steps(n, k_max):
    nodes = [k * (k + n - 1) for k in range(k_max + 2)]
    xs, ys = [], []
    for k in range(k_max + 1):
        level = counting_closed_form(n, k)
        xs += [nodes[k], nodes[k + 1]]
        ys += [level, level]
    return np.array(xs, dtype=float), np.array(ys, dtype=float)


fig, axes = plt.subplots(1, 2, figsize=(11, 4.5))
for ax, (n, k_max) in zip(axes, [(2, 30), (15, 15)]):
    xs, ys = steps(n, k_max)
    grid = np.linspace(0, xs[-1], 800)
    ax.plot(xs, ys, drawstyle="default", label="N(x)")
    ax.plot(grid, [weyl_value(n, x) for x in grid], label="w(x)")
    ax.set_title(f"S^{n}")
    ax.set_xlabel("x")
    ax.legend()
axes[1].ticklabel_format(axis="y", style="sci", scilimits=(8, 8))
fig.tight_layout()
fig.savefig("figure1.png", dpi=120)
print("wrote figure1.png")

# %%
# The exact regime behind the right panel.
print(regime_report(15, 200).to_dict())
