"""
Qubit closed form
=================

For H = X and V = Z each step is a rotation, so the n-step product is a
single rotation by n*theta about an axis u. Comparing with the exact
rotation (angle phi, axis v) isolates where the 1/n error comes from.
"""

# %%

import math

from prodform.qubit import asymptotic_report, qubit_diff, qubit_target

alpha = 0.5
for k in range(2, 8):
    n = 10**k
    d = qubit_diff(n, alpha)
    print(
        f"n=1e{k}  n*|U-V|={n * d.norm:.5f}  "
        f"phase gap*n^(2-a)={d.phase_gap * n ** (2 - alpha):.5f}  n*(u-v)_y={n * d.axis_gap[1]:.5f}"
    )

# %%
# The phase mismatch is of smaller order; the axis tilt along y carries
# the whole 1/n term, which is -i sin(phi) Y / n.

n = 10**6
print("sin(phi) at n=1e6:", math.sin(qubit_target(n, alpha).phi))
report = asymptotic_report(alpha, [10**k for k in range(3, 7)])
print(report["checks"])
