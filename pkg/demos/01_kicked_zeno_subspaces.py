"""
Kicked evolution and Zeno subspaces
===================================

Frequent unitary kicks confine a five-level system to the eigenspaces of
the kick. After undoing the kicks, the dynamics is generated by the
block-diagonal part of H alone.
"""

# %%
# A kick built from a potential with a doubly degenerate eigenvalue
# -----------------------------------------------------------------

import numpy as np

from prodform import (
    KickOperator,
    bound_constants,
    pulsed_error,
    random_hermitian,
    theorem1_bound,
    zeno_hamiltonian,
)
from prodform.matcore import commutator, hs_norm

H = random_hermitian(seed=0, dim=5)
V = np.diag([1.0, 1.0, 0.0, 0.0, 0.0]).astype(complex)
kick = KickOperator.from_generator(V)
print("sectors:", kick.m, "phases:", np.round(kick.phases, 4))

# %%
# The surviving generator commutes with the control

HZ = zeno_hamiltonian(H, kick.decomposition())
print("||[V, H_Z]|| =", hs_norm(commutator(V, HZ)))
print("coupling removed:", hs_norm(H - HZ))

# %%
# Error against the explicit bound
# --------------------------------
#
# The error decays like 1/n. The bound is loose by several orders of
# magnitude but has the same rate.

bc = bound_constants(kick, H, t=1.0)
for k in range(1, 7):
    n = 10**k
    print(f"n={n:>8d}  error={pulsed_error(kick, H, 1.0, n):.3e}  bound={theorem1_bound(bc, n):.3e}")
