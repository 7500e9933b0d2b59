"""Randomized structural invariants, 1000 cases per property."""
import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from prodform.evolutions import (
    KickOperator,
    coupled_evolution,
    kicked_evolution,
    trotter_step_power,
    zeno_hamiltonian,
)
from prodform.matcore import (
    commutator,
    dagger,
    expm_hermitian,
    hs_norm,
    spectral_projectors,
    unitarity_defect,
    unitary_power,
)
from prodform.experiments import random_hermitian

from oracles import random_unitary

CASES = settings(max_examples=1000, deadline=None)

seeds = st.integers(0, 2**32 - 1)
dims = st.integers(1, 6)
times = st.floats(-5, 5, allow_nan=False)


def degenerate_hermitian(seed, dim):
    """Hermitian matrix with repeated eigenvalues drawn from a small integer set."""
    gen = np.random.default_rng(seed)
    eigs = gen.integers(-2, 3, dim).astype(float)
    Q = random_unitary(gen, dim)
    V = Q @ np.diag(eigs) @ dagger(Q)
    return (V + dagger(V)) / 2


@CASES
@given(seeds, dims)
def test_projector_family_axioms(seed, dim):
    V = degenerate_hermitian(seed, dim)
    dec = spectral_projectors(V)
    eye = np.eye(dim)
    assert hs_norm(sum(dec.projectors) - eye) < 1e-10
    for i, P in enumerate(dec.projectors):
        assert hs_norm(P - dagger(P)) < 1e-12
        assert hs_norm(P @ P - P) < 1e-10
        for Q in dec.projectors[i + 1:]:
            assert hs_norm(P @ Q) < 1e-10
    assert hs_norm(dec.reconstruct() - V) < 1e-9
    assert len(set(np.round(dec.eigenvalues, 6))) == dec.m


@CASES
@given(seeds, dims)
def test_zeno_hamiltonian_commutes_and_is_idempotent(seed, dim):
    V = degenerate_hermitian(seed, dim)
    H = random_hermitian(seed, dim)
    dec = spectral_projectors(V)
    HZ = zeno_hamiltonian(H, dec)
    assert hs_norm(commutator(V, HZ)) < 1e-9
    assert hs_norm(zeno_hamiltonian(HZ, dec) - HZ) < 1e-12
    for P in dec.projectors:
        assert hs_norm(commutator(P, HZ)) < 1e-9


@CASES
@given(seeds, dims, times, times)
def test_expm_group_law_and_inverse(seed, dim, s1, s2):
    H = random_hermitian(seed, dim)
    a, b = expm_hermitian(H, s1), expm_hermitian(H, s2)
    assert hs_norm(a @ b - expm_hermitian(H, s1 + s2)) < 1e-11
    assert hs_norm(expm_hermitian(H, -s1) - dagger(a)) < 1e-12
    assert unitarity_defect(a) < 1e-12


@CASES
@given(seeds, dims, st.integers(0, 3000), st.integers(0, 3000))
def test_unitary_power_additive(seed, dim, p, q):
    U = random_unitary(np.random.default_rng(seed), dim)
    lhs = unitary_power(U, p) @ unitary_power(U, q)
    assert hs_norm(lhs - unitary_power(U, p + q)) < 1e-10


@CASES
@given(seeds, dims)
def test_hs_norm_unitarily_invariant(seed, dim):
    gen = np.random.default_rng(seed)
    A = gen.normal(size=(dim, dim)) + 1j * gen.normal(size=(dim, dim))
    U, W = random_unitary(gen, dim), random_unitary(gen, dim)
    assert abs(hs_norm(U @ A @ W) - hs_norm(A)) < 1e-12 * max(1.0, hs_norm(A))
    assert abs(hs_norm(A) - np.sqrt(np.trace(dagger(A) @ A).real)) < 1e-12 * max(1.0, hs_norm(A))


@CASES
@given(seeds, dims, times, st.floats(0, 1e4), st.integers(1, 10**7))
def test_all_evolutions_unitary(seed, dim, t, K, n):
    H = random_hermitian(seed, dim)
    V = degenerate_hermitian(seed + 1, dim)
    kick = KickOperator.from_generator(V)
    for U in (
        coupled_evolution(H, V, K, t),
        trotter_step_power(H, V, K, t, n),
        kicked_evolution(kick, H, t, n),
    ):
        assert unitarity_defect(U) <= 1e-10


@CASES
@given(seeds, dims)
def test_random_hermitian_deterministic_and_hermitian(seed, dim):
    a, b = random_hermitian(seed, dim), random_hermitian(seed, dim)
    assert np.array_equal(a, b)
    assert np.array_equal(a, dagger(a))
