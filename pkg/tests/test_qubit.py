import math

import mpmath as mp
import numpy as np
import pytest

from prodform.evolutions import trotter_step_power
from prodform.matcore import PAULI_X, PAULI_Y, PAULI_Z, expm_hermitian, hs_norm
from prodform.qubit import (
    asymptotic_report,
    leading_phase_gap,
    qubit_diff,
    qubit_step,
    qubit_target,
    rotation,
)

ALPHAS = [0.0, 0.3, 0.5, 0.8]


def mp_phase_gap(n, alpha):
    with mp.workdps(60):
        n = mp.mpf(n)
        K = n**alpha
        theta = mp.acos(mp.cos(K / n) * mp.cos(1 / n))
        return float(mp.sqrt(K**2 + 1) - n * theta)


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("n", [1, 7, 100, 10**5, 10**8])
def test_step_axis_is_unit(n, alpha):
    step = qubit_step(n, alpha)
    assert np.linalg.norm(step.u) == pytest.approx(1.0, abs=1e-12)
    assert math.cos(step.theta) == pytest.approx(math.cos(n**alpha / n) * math.cos(1 / n), abs=1e-12)


def test_step_n1_closed_form():
    step = qubit_step(1, 0.5)
    theta = math.acos(math.cos(1.0) ** 2)
    assert step.theta == pytest.approx(theta, rel=1e-14)
    c, s = math.cos(1.0), math.sin(1.0)
    assert np.allclose(step.u, np.array([c * s, s * s, s * c]) / math.sin(theta), atol=1e-14)


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("n", [1, 3, 50, 10**4])
def test_step_matches_matrix_product(n, alpha):
    product = expm_hermitian(PAULI_Z, n**alpha / n) @ expm_hermitian(PAULI_X, 1 / n)
    assert hs_norm(qubit_step(n, alpha).matrix() - product) < 1e-12


def test_target_values():
    tg = qubit_target(4, 0.5)
    assert tg.phi == pytest.approx(math.sqrt(5))
    assert np.allclose(tg.v, np.array([1, 0, 2]) / math.sqrt(5))
    for n in (1, 10, 10**6):
        tg = qubit_target(n, 0.0)
        assert tg.phi == pytest.approx(math.sqrt(2))
        assert np.allclose(tg.v, np.array([1, 0, 1]) / math.sqrt(2))


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("n", [1, 9, 1000, 10**6])
def test_target_matches_expm(n, alpha):
    tg = qubit_target(n, alpha)
    assert np.linalg.norm(tg.v) == pytest.approx(1.0, abs=1e-12)
    assert tg.phi >= 1
    assert hs_norm(tg.matrix() - expm_hermitian(n**alpha * PAULI_Z + PAULI_X, 1.0)) < 1e-12 * max(1, tg.phi)


def test_rejects_alpha_out_of_range():
    with pytest.raises(ValueError):
        qubit_step(10, 1.0)
    with pytest.raises(ValueError):
        qubit_target(10, -0.1)


def test_diff_scaled_norm_bounded():
    for k in range(2, 9):
        n = 10**k
        assert n * qubit_diff(n, 0.5).norm <= 4


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8])
@pytest.mark.parametrize("n", [10**3, 10**4, 10**5])
def test_phase_gap_against_high_precision(n, alpha):
    assert qubit_diff(n, alpha).phase_gap == pytest.approx(mp_phase_gap(n, alpha), rel=1e-3)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8])
def test_phase_gap_asymptotic(alpha):
    n = 10**6
    assert qubit_diff(n, alpha).phase_gap * n ** (2 - alpha) == pytest.approx(1 / 6, rel=0.05)
    # smaller order than 1/n
    scaled = [n * qubit_diff(n, alpha).phase_gap for n in (10**3, 10**4, 10**5, 10**6)]
    assert all(b < a for a, b in zip(scaled, scaled[1:]))


def test_phase_gap_alpha_zero_branch():
    n = 10**5
    assert qubit_diff(n, 0.0).phase_gap == pytest.approx(leading_phase_gap(n, 0.0), rel=0.01)
    assert leading_phase_gap(n, 0.0) * n**2 == pytest.approx(1 / (6 * math.sqrt(2)))


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8])
def test_axis_gap_components(alpha):
    n = 10**6
    gap = qubit_diff(n, alpha).axis_gap
    assert gap[0] == pytest.approx(-(n**alpha) / (3 * n**2), rel=0.05)
    assert n * gap[1] == pytest.approx(1.0, rel=0.05)
    assert gap[2] == pytest.approx(-1 / (6 * n**2), rel=0.05)
    # first and third components vanish after scaling by n
    assert abs(n * gap[0]) < 0.05 and abs(n * gap[2]) < 1e-6


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8])
def test_leading_order_identity(alpha):
    n = 10**6
    d = qubit_diff(n, alpha)
    phi = qubit_target(n, alpha).phi
    assert hs_norm(n * d.diff + 1j * math.sin(phi) * PAULI_Y) <= 0.1


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8])
@pytest.mark.parametrize("n", [10, 1000, 10**5])
def test_closed_form_matches_generic_path(n, alpha):
    step = qubit_step(n, alpha)
    closed = rotation(n * step.theta, step.u)
    generic = trotter_step_power(PAULI_X, PAULI_Z, n**alpha, 1.0, n)
    assert hs_norm(closed - generic) < 1e-10


@pytest.mark.parametrize("alpha", [0.0, 0.5])
def test_asymptotic_report_passes(alpha):
    report = asymptotic_report(alpha, [10**k for k in range(3, 7)])
    assert report["passed"], report["checks"]
