"""
Ball and sphere volumes, and the two-term coefficient
=====================================================

Volumes are carried symbolically as c * pi^m. Their product collapses to
2 (2 pi)^n / n!, which is what turns the Weyl function of S^n into
(2/n!) x^(n/2). In the second-term coefficient every pi cancels.
"""

from sphereweyl import ball_volume, product_identity_check, sphere_volume, two_term_coefficient

for n in range(0, 9):
    print(n, ball_volume(n).value, sphere_volume(n).value, product_identity_check(n))

# %%
for n in range(2, 9):
    print(f"n={n}: c2 = {two_term_coefficient(n)}")
