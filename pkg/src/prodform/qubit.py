"""Closed-form analysis of the qubit product formula with V = Z, H = X, t = 1.

The single step exp(-i (K/n) Z) exp(-i (1/n) X), K = n**alpha, is a rotation
exp(-i theta_n u_n . sigma); the exact target exp(-i (K Z + X)) is the rotation
exp(-i phi_n v_n . sigma). Everything below is evaluated from these angles and
axes, without any matrix exponentials.
"""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import DegenerateAngle
from .matcore import PAULI_I, PAULI_X, PAULI_Y, PAULI_Z, hs_norm

_SIGMA = (PAULI_X, PAULI_Y, PAULI_Z)


def _check(n: int, alpha: float) -> None:
    if n < 1:
        raise ValueError("n must be a positive integer")
    if not 0.0 <= alpha < 1.0:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")


def rotation(angle: float, axis) -> np.ndarray:
    """exp(-i angle axis . sigma) for a unit 3-vector ``axis``."""
    return math.cos(angle) * PAULI_I - 1j * math.sin(angle) * sum(a * s for a, s in zip(axis, _SIGMA))


class QubitStep(NamedTuple):
    n: int
    alpha: float
    theta: float
    u: np.ndarray

    def matrix(self) -> np.ndarray:
        return rotation(self.theta, self.u)


class QubitTarget(NamedTuple):
    n: int
    alpha: float
    phi: float
    v: np.ndarray

    def matrix(self) -> np.ndarray:
        return rotation(self.phi, self.v)


class QubitDiff(NamedTuple):
    diff: np.ndarray
    norm: float
    phase_gap: float
    axis_gap: np.ndarray


def qubit_step(n: int, alpha: float) -> QubitStep:
    """Angle and axis of the single Trotter step.

    theta_n is taken from atan2 of the quaternion components of the 2x2
    product rather than arccos(cos a cos b), which loses half the digits
    once the argument is close to one.
    """
    _check(n, alpha)
    a = float(n) ** alpha / n
    b = 1.0 / n
    w = np.array([math.cos(a) * math.sin(b), math.sin(a) * math.sin(b), math.sin(a) * math.cos(b)])
    s = math.sqrt(float(w @ w))
    if s < 1e-300:
        raise DegenerateAngle(f"sin(theta_n) underflows at n={n}")
    return QubitStep(n, alpha, math.atan2(s, math.cos(a) * math.cos(b)), w / s)


def qubit_target(n: int, alpha: float) -> QubitTarget:
    _check(n, alpha)
    K = float(n) ** alpha
    phi = math.sqrt(K * K + 1.0)
    return QubitTarget(n, alpha, phi, np.array([1.0, 0.0, K]) / phi)


def qubit_diff(n: int, alpha: float) -> QubitDiff:
    """U_n - V_n with its norm and the gaps phi_n - n theta_n, u_n - v_n."""
    step, target = qubit_step(n, alpha), qubit_target(n, alpha)
    U = rotation(n * step.theta, step.u)
    D = U - target.matrix()
    return QubitDiff(D, hs_norm(D), target.phi - n * step.theta, step.u - target.v)


def leading_phase_gap(n: int, alpha: float) -> float:
    """Leading term K^2 / (6 n^2 phi_n) of phi_n - n theta_n.

    For K = n**alpha large this is n**alpha / (6 n^2); at alpha = 0 it is
    1 / (6 sqrt(2) n^2).
    """
    K = float(n) ** alpha
    return K * K / (6.0 * n * n * math.sqrt(K * K + 1.0))


def leading_difference(n: int, alpha: float) -> np.ndarray:
    """Leading term -i sin(phi_n) (K/phi_n) Y / n of U_n - V_n."""
    t = qubit_target(n, alpha)
    K = float(n) ** alpha
    return -1j * math.sin(t.phi) * (K / t.phi) * PAULI_Y / n


def asymptotic_report(alpha: float, ns, tol: float = 0.05) -> dict:
    """Tabulate the qubit error quantities on ``ns`` and check them at the last n.

    Checks, each against the exact leading-order prediction:
      * phase:   (phi_n - n theta_n) / leading_phase_gap -> 1 within ``tol``
      * axis:    n (u_n - v_n)_y phi_n / K -> 1 within ``tol``
      * leading: || n (U_n - V_n) - n leading_difference || <= 0.1
    """
    _check(1, alpha)
    rows = []
    for n in ns:
        d = qubit_diff(int(n), alpha)
        K = float(n) ** alpha
        phi = math.sqrt(K * K + 1.0)
        rows.append(
            {
                "n": int(n),
                "norm": d.norm,
                "n_norm": n * d.norm,
                "phase_gap": d.phase_gap,
                "axis_gap": float(np.linalg.norm(d.axis_gap)),
                "phase_ratio": d.phase_gap / leading_phase_gap(int(n), alpha),
                "axis_ratio": float(n * d.axis_gap[1] * phi / K),
                "leading_residual": hs_norm(n * (d.diff - leading_difference(int(n), alpha))),
            }
        )
    last = rows[-1]
    checks = {
        "phase": abs(last["phase_ratio"] - 1) <= tol,
        "axis": abs(last["axis_ratio"] - 1) <= tol,
        "leading": last["leading_residual"] <= 0.1,
    }
    return {"alpha": alpha, "rows": rows, "checks": checks, "passed": all(checks.values())}
