"""Generalized product formulas and quantum Zeno control.

Kicked (bang-bang), strongly coupled, intermediate (K_n = n**alpha) and
generalized Trotter evolutions, their error functionals and explicit
bounds, and the numerical campaigns that measure their convergence rates.
"""
__version__ = "0.1.0"

from .errors import (
    ConfigError,
    DegenerateAngle,
    DimensionMismatch,
    InsufficientPoints,
    NonpositiveValues,
    NotHermitian,
    NotUnitary,
    ProdFormError,
    ResonantPhases,
    ScheduleViolation,
)
from .matcore import (
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    SpectralDecomposition,
    expm_hermitian,
    hs_norm,
    spectral_projectors,
    unitary_power,
)
from .evolutions import (
    BoundConstants,
    KickOperator,
    ScalingSchedule,
    bound_constants,
    coupled_evolution,
    generalized_trotter_error,
    intermediate_zeno_error,
    kicked_evolution,
    nonresonance_check,
    pulsed_error,
    resonance_constant,
    strong_coupling_error,
    theorem1_bound,
    theorem4_bound,
    trotter_step_power,
    zeno_hamiltonian,
)
from .qubit import QubitStep, QubitTarget, qubit_diff, qubit_step, qubit_target
from .experiments import (
    ConvergenceSeries,
    ExperimentConfig,
    PowerLawFit,
    beta_curve,
    diag_potential,
    loglog_fit,
    random_hermitian,
    resonance_demo,
    sweep,
)
