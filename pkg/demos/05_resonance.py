"""
A resonant schedule without a limit
===================================

With V**2 = I, t = pi/2 and K_n = n**2, the kick exp(-i (t/n) K_n V) is a
multiple of the identity for even n and proportional to V for odd n. The
product therefore alternates between two different operators.
"""

# %%

import numpy as np

from prodform import random_hermitian, resonance_demo

rows = resonance_demo(random_hermitian(0, 5), range(1, 21))
for r in rows:
    print(f"n={r.n:>3d} {r.parity:>4}  deviation={r.deviation:.3e}  without control phase={r.frame_deviation:.3e}")

# %%
# When H commutes with V the control phase is the only difference

H = np.diag(np.diag(random_hermitian(1, 5)).real).astype(complex)
print(max(r.frame_deviation for r in resonance_demo(H, range(1, 101))))
