"""Dense complex linear algebra for small square matrices.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``. The
functions here validate their inputs and never mutate them.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotHermitian, NotUnitary

HERMITIAN_RTOL = 1e-10
UNITARY_TOL = 1e-9

PAULI_I = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def as_matrix(A) -> np.ndarray:
    """Coerce ``A`` to a finite square complex128 array."""
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise DimensionMismatch(f"expected a non-empty square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    return A


def check_same_dim(*mats: np.ndarray) -> int:
    dims = {m.shape[0] for m in mats}
    if len(dims) != 1:
        raise DimensionMismatch(f"operand dimensions differ: {sorted(dims)}")
    return dims.pop()


def dagger(A: np.ndarray) -> np.ndarray:
    return A.conj().T


def hs_norm(A) -> float:
    """Hilbert-Schmidt norm sqrt(tr(A^dagger A))."""
    A = as_matrix(A)
    scale = np.abs(A).max()
    if scale == 0:
        return 0.0
    # rescale by an exact power of two so tiny entries do not underflow when
    # squared; 1/scale itself would overflow for subnormal scale
    e = int(np.frexp(scale)[1])
    B = np.ldexp(A.real, -e) + 1j * np.ldexp(A.imag, -e)
    return float(np.ldexp(np.linalg.norm(B, "fro"), e))


def is_hermitian(H: np.ndarray, rtol: float = HERMITIAN_RTOL) -> bool:
    return np.linalg.norm(H - dagger(H), "fro") <= rtol * max(1.0, np.linalg.norm(H, "fro"))


def require_hermitian(H) -> np.ndarray:
    H = as_matrix(H)
    if not is_hermitian(H):
        raise NotHermitian(f"||H - H^dagger|| = {np.linalg.norm(H - dagger(H)):.3e}")
    return H


def unitarity_defect(U: np.ndarray) -> float:
    return float(np.linalg.norm(dagger(U) @ U - np.eye(U.shape[0]), "fro"))


def commutator(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return A @ B - B @ A


def _is_diagonal(A: np.ndarray) -> bool:
    return not np.any(A - np.diag(np.diag(A)))


def expm_hermitian(H, s: float) -> np.ndarray:
    """Return exp(-i s H) for Hermitian ``H``.

    Uses the eigendecomposition of H, so the result is unitary to machine
    precision. Diagonal input is exponentiated entrywise, which keeps
    commuting diagonal products exact.
    """
    H = require_hermitian(H)
    if _is_diagonal(H):
        return np.diag(np.exp(-1j * s * np.diag(H).real))
    w, v = np.linalg.eigh((H + dagger(H)) / 2)
    return (v * np.exp(-1j * s * w)) @ dagger(v)


def _reunitarize(X: np.ndarray) -> np.ndarray:
    # one Newton-Schulz step toward the polar factor: defect d -> O(d^2)
    return 1.5 * X - 0.5 * X @ (dagger(X) @ X)


def unitary_power(U, n: int) -> np.ndarray:
    """U**n by binary exponentiation (about 2 log2(n) multiplies).

    Squaring doubles the unitarity defect each time, so the squared base is
    pulled back toward the unitary group after every step. Without this
    the defect grows like n * eps (about 3e-9 at n = 1e7).
    """
    U = as_matrix(U)
    n = int(n)
    if n < 0:
        raise ValueError("n must be nonnegative")
    defect = unitarity_defect(U)
    if defect > UNITARY_TOL * U.shape[0]:
        raise NotUnitary(f"||U^dagger U - I|| = {defect:.3e}")
    result = np.eye(U.shape[0], dtype=complex)
    base = U
    while n:
        if n & 1:
            result = result @ base
        n >>= 1
        if n:
            base = _reunitarize(base @ base)
    return result


@dataclass(frozen=True)
class SpectralDecomposition:
    """Distinct eigenvalues with their orthogonal eigenprojections."""

    eigenvalues: np.ndarray
    projectors: tuple

    @property
    def m(self) -> int:
        return len(self.eigenvalues)

    @property
    def dim(self) -> int:
        return self.projectors[0].shape[0]

    def reconstruct(self) -> np.ndarray:
        return sum(lam * P for lam, P in zip(self.eigenvalues, self.projectors))


def _cluster_projector(vecs: np.ndarray) -> np.ndarray:
    P = vecs @ dagger(vecs)
    return (P + dagger(P)) / 2


def spectral_projectors(V, cluster_tol: float | None = None) -> SpectralDecomposition:
    """Spectral decomposition of Hermitian ``V`` into distinct eigenvalues.

    Sorted eigenvalues closer than ``cluster_tol`` to their neighbour are
    merged into one eigenvalue (the cluster mean). The default tolerance is
    ``1e-8 * max(1, ||V||)``.
    """
    V = require_hermitian(V)
    if cluster_tol is None:
        cluster_tol = 1e-8 * max(1.0, hs_norm(V))
    w, v = np.linalg.eigh((V + dagger(V)) / 2)
    groups = [[0]]
    for i in range(1, len(w)):
        if w[i] - w[groups[-1][-1]] > cluster_tol:
            groups.append([i])
        else:
            groups[-1].append(i)
    eigenvalues = np.array([w[g].mean() for g in groups])
    projectors = tuple(_cluster_projector(v[:, g]) for g in groups)
    return SpectralDecomposition(eigenvalues, projectors)
