"""Evolution operators of the four control protocols, their error
functionals, and the explicit error bounds.

Protocols, for Hermitian H (free Hamiltonian) and V (control potential):

* kicked:     U_n(t)      = (U_k exp(-i t H / n))^n
* coupled:    U_K(t)      = exp(-i t (H + K V))
* stepped:    U_{n,K}(t)  = (exp(-i (t/n) K V) exp(-i (t/n) H))^n
* intermediate / generalized Trotter: U_{n,K_n}(t) with K_n = n**alpha

All errors are measured in the Hilbert-Schmidt norm.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

import numpy as np
import scipy.linalg

from .errors import DimensionMismatch, ResonantPhases, ScheduleViolation
from .matcore import (
    SpectralDecomposition,
    as_matrix,
    check_same_dim,
    dagger,
    expm_hermitian,
    hs_norm,
    require_hermitian,
    spectral_projectors,
    unitary_power,
)

PHASE_CLUSTER_TOL = 1e-8


def wrap_phase(x: float) -> float:
    """Map a phase to the interval (-pi, pi]."""
    w = math.remainder(x, 2 * math.pi)
    return w + 2 * math.pi if w <= -math.pi else w


def _arc(a: float, b: float) -> float:
    return abs(math.remainder(a - b, 2 * math.pi))


def _cluster_on_circle(phases, projectors, tol):
    order = np.argsort(phases)
    groups = [[order[0]]]
    for i in order[1:]:
        if _arc(phases[i], phases[groups[-1][-1]]) > tol:
            groups.append([i])
        else:
            groups[-1].append(i)
    if len(groups) > 1 and _arc(phases[groups[0][0]], phases[groups[-1][-1]]) <= tol:
        groups[0] = groups.pop() + groups[0]
    out_phases, out_projs = [], []
    for g in groups:
        mean = np.angle(np.mean(np.exp(1j * np.asarray([phases[i] for i in g]))))
        out_phases.append(wrap_phase(float(mean)))
        P = sum(projectors[i] for i in g)
        out_projs.append((P + dagger(P)) / 2)
    return out_phases, out_projs


@dataclass(frozen=True)
class KickOperator:
    """Unitary kick U_k = sum_mu exp(-i phi_mu) P_mu with distinct phases."""

    matrix: np.ndarray
    phases: tuple
    projectors: tuple

    @property
    def m(self) -> int:
        return len(self.phases)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def from_generator(cls, G, s: float = 1.0, tol: float = PHASE_CLUSTER_TOL) -> "KickOperator":
        """Kick exp(-i s G) built from the spectral decomposition of G."""
        dec = spectral_projectors(G)
        phases = [wrap_phase(s * lam) for lam in dec.eigenvalues]
        phases, projs = _cluster_on_circle(phases, list(dec.projectors), tol)
        return cls(expm_hermitian(G, s), tuple(phases), tuple(projs))

    @classmethod
    def from_unitary(cls, U, tol: float = PHASE_CLUSTER_TOL) -> "KickOperator":
        """Kick from an arbitrary unitary matrix (complex Schur form)."""
        U = as_matrix(U)
        T, Z = scipy.linalg.schur(U, output="complex")
        phases = [wrap_phase(-float(np.angle(z))) for z in np.diag(T)]
        rank_one = [np.outer(Z[:, i], Z[:, i].conj()) for i in range(U.shape[0])]
        phases, projs = _cluster_on_circle(phases, rank_one, tol)
        return cls(U, tuple(phases), tuple(projs))

    def decomposition(self) -> SpectralDecomposition:
        return SpectralDecomposition(np.asarray(self.phases), self.projectors)


@dataclass(frozen=True)
class ScalingSchedule:
    """The coupling schedule n -> K_n.

    Use :meth:`power`, :meth:`linear` or :meth:`table` to construct one.
    """

    kind: str
    alpha: float = 1.0
    values: Mapping[int, float] = field(default_factory=dict)

    @classmethod
    def power(cls, alpha: float) -> "ScalingSchedule":
        return cls("power", float(alpha))

    @classmethod
    def linear(cls) -> "ScalingSchedule":
        return cls("linear", 1.0)

    @classmethod
    def table(cls, values: Mapping[int, float]) -> "ScalingSchedule":
        return cls("table", float("nan"), dict(values))

    def __call__(self, n: int) -> float:
        if self.kind == "power":
            return float(n) ** self.alpha
        if self.kind == "linear":
            return float(n)
        try:
            return float(self.values[n])
        except KeyError:
            raise ValueError(f"schedule table has no entry for n={n}") from None


@dataclass(frozen=True)
class BoundConstants:
    """Constants entering the explicit kicked-evolution error bound."""

    C: float
    m: int
    h_norm: float
    t: float


def _herm_pair(H, V):
    H, V = require_hermitian(H), require_hermitian(V)
    check_same_dim(H, V)
    return H, V


def zeno_hamiltonian(H, dec: SpectralDecomposition) -> np.ndarray:
    """H_Z = sum_mu P_mu H P_mu."""
    H = require_hermitian(H)
    if H.shape[0] != dec.dim:
        raise DimensionMismatch(f"H has dim {H.shape[0]}, projectors have dim {dec.dim}")
    HZ = sum(P @ H @ P for P in dec.projectors)
    return (HZ + dagger(HZ)) / 2


def kicked_evolution(kick: KickOperator, H, t: float, n: int) -> np.ndarray:
    H = require_hermitian(H)
    check_same_dim(kick.matrix, H)
    return unitary_power(kick.matrix @ expm_hermitian(H, t / n), n)


def coupled_evolution(H, V, K: float, t: float) -> np.ndarray:
    H, V = _herm_pair(H, V)
    return expm_hermitian(H + K * V, t)


def trotter_step_power(H, V, K: float, t: float, n: int) -> np.ndarray:
    """U_{n,K}(t) = (exp(-i (t/n) K V) exp(-i (t/n) H))^n."""
    H, V = _herm_pair(H, V)
    step = expm_hermitian(V, t * K / n) @ expm_hermitian(H, t / n)
    return unitary_power(step, n)


def pulsed_error(kick: KickOperator, H, t: float, n: int) -> float:
    """||U_k^{dagger n} U_n(t) - exp(-i t H_Z)|| with H_Z from the kick's projectors."""
    U = kicked_evolution(kick, H, t, n)
    HZ = zeno_hamiltonian(H, kick.decomposition())
    return hs_norm(unitary_power(dagger(kick.matrix), n) @ U - expm_hermitian(HZ, t))


def strong_coupling_error(H, V, K: float, t: float) -> float:
    """||exp(i t K V) exp(-i t (H + K V)) - exp(-i t H_Z)||."""
    H, V = _herm_pair(H, V)
    HZ = zeno_hamiltonian(H, spectral_projectors(V))
    lhs = expm_hermitian(V, -t * K) @ expm_hermitian(H + K * V, t)
    return hs_norm(lhs - expm_hermitian(HZ, t))


def intermediate_zeno_error(H, V, schedule: ScalingSchedule, t: float, n: int) -> float:
    """eps^Z(n) = ||U_{n,K_n}(t) - exp(-i t K_n V) exp(-i t H_Z)||.

    Raises ScheduleViolation when K_n >= n: the kick phases may then wrap
    around the circle and the eigenprojections of the kick and of V differ.
    """
    H, V = _herm_pair(H, V)
    K = schedule(n)
    if K >= n:
        raise ScheduleViolation(
            f"K_n = {K:.6g} >= n = {n}: the intermediate limit requires K_n = o(n)"
        )
    HZ = zeno_hamiltonian(H, spectral_projectors(V))
    target = expm_hermitian(V, t * K) @ expm_hermitian(HZ, t)
    return hs_norm(trotter_step_power(H, V, K, t, n) - target)


def generalized_trotter_error(H, V, schedule: ScalingSchedule, t: float, n: int) -> float:
    """eps^T(n) = ||U_{n,K_n}(t) - exp(-i t (K_n V + H))||."""
    H, V = _herm_pair(H, V)
    K = schedule(n)
    return hs_norm(trotter_step_power(H, V, K, t, n) - expm_hermitian(H + K * V, t))


def resonance_constant(phases, tol: float = PHASE_CLUSTER_TOL) -> float:
    """C = max over pairs of 1/|sin((phi_mu - phi_nu)/2)|."""
    phases = [float(p) for p in phases]
    if len(phases) < 2:
        raise ValueError("need at least two phases")
    worst = 0.0
    for a, b in combinations(phases, 2):
        s = abs(math.sin((a - b) / 2))
        if s <= tol:
            raise ResonantPhases(f"phases {a!r} and {b!r} coincide modulo 2 pi")
        worst = max(worst, 1.0 / s)
    return worst


def bound_constants(kick: KickOperator, H, t: float) -> BoundConstants:
    """Collect C, m, ||H|| and t for a kick/Hamiltonian pair.

    With a single sector (m = 1) the kick is a global phase, there is no
    resonance to control, and C is set to 1.
    """
    C = resonance_constant(kick.phases) if kick.m > 1 else 1.0
    return BoundConstants(C=C, m=kick.m, h_norm=hs_norm(H), t=float(t))


def theorem1_bound(bc: BoundConstants, n: int) -> float:
    """C t m^2 ||H|| (1 + 2 exp(t m ||H||)) / n."""
    t = abs(bc.t)
    return bc.C * t * bc.m**2 * bc.h_norm * (1 + 2 * math.exp(t * bc.m * bc.h_norm)) / n


def theorem4_bound(a_norm: float, b_norm: float, K_n: float, n: int) -> float:
    """Leading term K_n ||A|| ||B|| / n of the generalized Trotter error,
    with A = -i V and B = -i t H. The o(K_n/n) remainder is not included."""
    return K_n * a_norm * b_norm / n


def nonresonance_check(t: float, eigenvalues, tol: float = 1e-9) -> bool:
    """True iff the exp(-i t lambda_mu) are pairwise distinct.

    Two eigenvalues are resonant when t (lambda_mu - lambda_nu) lies
    within ``tol`` of a multiple of 2 pi.
    """
    for a, b in combinations([float(x) for x in eigenvalues], 2):
        if abs(math.remainder(t * (a - b), 2 * math.pi)) <= tol:
            return False
    return True
