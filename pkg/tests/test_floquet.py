"""Monodromy operator, quasienergy folding, amplification rate and phase
classification."""

import cmath
import math

import numpy as np
import pytest

from conftest import matrix_scale, random_specs

from ptfloquet import (
    DrivingSpec,
    PhaseClass,
    amplification_rate,
    classify,
    compose,
    decompose,
    eigenvalues2,
    expm_traceless,
    h_pt,
    monodromy,
    passive_monodromy,
    passive_shift,
    quasienergy,
)
from ptfloquet.pauli import SIGMA_Z


def test_monodromy_hermitian_limit():
    spec = DrivingSpec(gamma0=0.0, mu=0.3, omega=1.7)
    two_tau = 2.0 * spec.tau
    expected = compose(math.cos(two_tau), 1j * math.sin(two_tau), 0, 0)
    np.testing.assert_allclose(monodromy(spec), expected, atol=1e-14)
    # unitary: G G^dag = 1
    m = monodromy(spec)
    np.testing.assert_allclose(m @ m.conj().T, np.eye(2), atol=1e-13)


def test_monodromy_static_reduction():
    spec = DrivingSpec(gamma0=0.8, mu=1.0, omega=2.2)
    direct = expm_traceless((-1.0, 0.0, 1j * 0.8), 2.0 * spec.tau)
    np.testing.assert_allclose(monodromy(spec), direct, atol=1e-13)


def test_monodromy_half_integer_ellipse_point():
    # on the half-integer ellipse the trace drops below -1: broken phase
    spec = DrivingSpec(gamma0=0.6, mu=-1.0, omega=1.6)
    m = monodromy(spec)
    half_trace = (m[0, 0] + m[1, 1]).real / 2.0
    assert half_trace == pytest.approx(-2.125, abs=1e-12)
    assert half_trace < -1.0


def test_monodromy_order_gain_half_first():
    # G(T) = G_minus G_plus, not the reverse; the two differ when mu != 1
    spec = DrivingSpec(gamma0=0.5, mu=0.0, omega=2.0)
    g_plus_half = expm_traceless((-1.0, 0.0, 0.5j), spec.tau)
    g_minus_half = expm_traceless((-1.0, 0.0, 0.0j), spec.tau)
    np.testing.assert_allclose(monodromy(spec), g_minus_half @ g_plus_half, atol=1e-14)
    reversed_product = g_plus_half @ g_minus_half
    assert not np.allclose(monodromy(spec), reversed_product, atol=1e-8)


def test_quasienergy_identity_and_static():
    assert quasienergy(np.eye(2), 0.7) == 0
    # static drive below threshold: eps_f is the static eigenvalue folded
    spec = DrivingSpec(gamma0=0.6, mu=1.0, omega=3.0)
    eps = quasienergy(monodromy(spec), spec.tau)
    assert eps.imag == 0.0
    assert eps.real == pytest.approx(0.8, abs=1e-12)
    # omega = 1: 0.8 folds to 0.2 by reflection at the zone edge
    spec = DrivingSpec(gamma0=0.6, mu=1.0, omega=1.0)
    eps = quasienergy(monodromy(spec), spec.tau)
    assert eps.real == pytest.approx(0.2, abs=1e-12)
    assert 0.0 <= eps.real <= spec.omega / 2.0


def test_quasienergy_broken_point_has_growth():
    spec = DrivingSpec(gamma0=0.6, mu=-1.0, omega=1.6)
    eps = quasienergy(monodromy(spec), spec.tau)
    assert eps.imag > 0.0


def test_quasienergy_reconstructs_half_trace():
    rng = np.random.default_rng(31)
    for spec in random_specs(rng, 300, gamma_hi=4.0, omega_lo=0.2, max_growth=40.0):
        m = monodromy(spec)
        half_trace = (m[0, 0] + m[1, 1]) / 2.0
        eps = quasienergy(m, spec.tau)
        back = cmath.cos(2.0 * eps * spec.tau)
        assert abs(back - half_trace) <= 1e-12 * max(1.0, abs(half_trace))


def test_amplification_rate_values():
    assert amplification_rate(np.eye(2)) == 0.0
    theta = 0.9
    unitary = compose(math.cos(theta), 0, 1j * math.sin(theta), 0)
    assert amplification_rate(unitary) <= 1e-15
    assert amplification_rate(np.diag([2.0, 0.5])) == pytest.approx(0.6, abs=1e-15)


def test_amplification_rate_static_broken_growth():
    # derived oracle: broken static drive has |g_pm| = exp(-+ 2 q tau) with
    # q = sqrt(gamma0^2 - J^2), hence c = tanh(2 q tau)
    gamma0 = 1.25
    q = math.sqrt(gamma0**2 - 1.0)
    for omega in (1.0, 2.0, 5.0):
        spec = DrivingSpec(gamma0=gamma0, mu=1.0, omega=omega)
        m = monodromy(spec)
        g_plus, g_minus = eigenvalues2(m)
        assert abs(g_plus) == pytest.approx(math.exp(2.0 * q * spec.tau), rel=1e-12)
        assert abs(g_minus) == pytest.approx(math.exp(-2.0 * q * spec.tau), rel=1e-12)
        assert amplification_rate(m) == pytest.approx(
            math.tanh(2.0 * q * spec.tau), rel=1e-12
        )


def test_amplification_rate_scalar_invariance():
    rng = np.random.default_rng(32)
    for spec in random_specs(rng, 200, gamma_hi=4.0, omega_lo=0.2, max_growth=30.0):
        m = monodromy(spec)
        c = amplification_rate(m)
        for _ in range(3):
            s = complex(rng.normal(), rng.normal()) * 10.0 ** rng.integers(-3, 4)
            if s == 0:
                continue
            assert abs(amplification_rate(s * m) - c) <= 1e-12


def test_classify_examples():
    assert classify(DrivingSpec(0.5, 1.0, 3.0)).phase is PhaseClass.UNBROKEN
    assert classify(DrivingSpec(1.5, 1.0, 3.0)).phase is PhaseClass.BROKEN
    assert classify(DrivingSpec(0.05, -1.0, 2.0)).phase is PhaseClass.BROKEN


def test_classify_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        classify(DrivingSpec(0.5, 1.0, 3.0), tol=0.0)


def test_classify_result_invariants():
    rng = np.random.default_rng(33)
    for spec in random_specs(rng, 200, gamma_hi=4.0, omega_lo=0.2, max_growth=40.0):
        r = classify(spec)
        scale2 = matrix_scale(r.monodromy) ** 2
        assert abs(r.g_plus * r.g_minus - 1.0) <= 1e-12 * scale2
        assert abs(r.g_plus) >= abs(r.g_minus) * (1.0 - 1e-14)
        assert 0.0 <= r.c < 1.0
        half_trace = (r.monodromy[0, 0] + r.monodromy[1, 1]) / 2.0
        back = cmath.cos(2.0 * r.eps_f * spec.tau)
        assert abs(back - half_trace) <= 1e-12 * max(1.0, abs(half_trace))
        if r.phase is PhaseClass.UNBROKEN:
            assert r.c <= 1e-9
            assert abs(abs(r.g_plus) - 1.0) <= 1e-9


def test_classify_exceptional_band():
    # just past the static threshold the trace sits within tol of -1/+1
    # while c is already above tol: the boundary skin classifies Exceptional
    spec = DrivingSpec(gamma0=1.0 + 1e-14, mu=1.0, omega=2.0)
    r = classify(spec)
    assert r.phase is PhaseClass.EXCEPTIONAL


def test_unbroken_wins_inside_band():
    # on the integer ellipse the monodromy is the identity: a degenerate but
    # symmetric point, classified Unbroken rather than Exceptional
    spec = DrivingSpec(gamma0=0.6, mu=-1.0, omega=0.8)
    r = classify(spec)
    assert np.allclose(r.monodromy, np.eye(2), atol=1e-12)
    assert r.phase is PhaseClass.UNBROKEN


def test_trace_is_real_for_every_drive():
    rng = np.random.default_rng(34)
    for spec in random_specs(rng, 500, max_growth=600.0):
        m = monodromy(spec)
        trace = m[0, 0] + m[1, 1]
        assert abs(trace.imag) <= 1e-12 * max(1.0, abs(trace.real))


def test_mu_minus1_symmetry_inverse_under_sz_conjugation():
    # gain/loss reversal makes sz G sz = G^{-1}
    rng = np.random.default_rng(35)
    checked_absolute = 0
    for _ in range(300):
        gamma0 = float(rng.uniform(0.0, 4.0))
        omega = float(rng.uniform(0.1, 6.0))
        spec = DrivingSpec(gamma0=gamma0, mu=-1.0, omega=omega)
        m = monodromy(spec)
        product = SIGMA_Z @ m @ SIGMA_Z @ m
        scale2 = matrix_scale(m) ** 2
        np.testing.assert_allclose(product, np.eye(2), atol=1e-11 * scale2)
        if scale2 <= 1e4:
            np.testing.assert_allclose(product, np.eye(2), atol=1e-11)
            checked_absolute += 1
    assert checked_absolute > 50


def test_high_frequency_effective_hamiltonian():
    # at omega >> J, gamma0 the drive averages: H_F -> h_pt(J, (1+mu)gamma0/2)
    omega = 1e3
    for gamma0, mu in [(0.3, 0.5), (0.8, -1.0), (2.0, 0.0), (1.5, -0.5), (0.5, 1.0)]:
        spec = DrivingSpec(gamma0=gamma0, mu=mu, omega=omega)
        m = monodromy(spec)
        eps = quasienergy(m, spec.tau)
        _, p1, p2, p3 = decompose(m)
        s2 = cmath.sin(2.0 * eps * spec.tau)
        h_f = compose(0.0, 1j * eps * p1 / s2, 1j * eps * p2 / s2, 1j * eps * p3 / s2)
        target = h_pt(1.0, (1.0 + mu) * gamma0 / 2.0).matrix()
        tol = 10.0 * (gamma0**2 + 1.0) / omega
        np.testing.assert_allclose(h_f, target, atol=tol)


def test_passive_monodromy_properties():
    spec = DrivingSpec(gamma0=0.0, mu=0.4, omega=2.0)
    np.testing.assert_allclose(passive_monodromy(spec), monodromy(spec), atol=0)

    rng = np.random.default_rng(36)
    for spec in random_specs(rng, 200, gamma_hi=4.0, omega_lo=0.2, max_growth=30.0):
        active_c = amplification_rate(monodromy(spec))
        passive_c = amplification_rate(passive_monodromy(spec))
        assert abs(active_c - passive_c) <= 1e-12

    # pure loss: spectral radius stays below 1
    spec = DrivingSpec(gamma0=0.5, mu=0.0, omega=2.0)
    g_plus, g_minus = eigenvalues2(passive_monodromy(spec))
    assert abs(g_plus) <= 1.0 and abs(g_minus) <= 1.0


def test_passive_monodromy_equals_shifted_hamiltonian_route():
    # identity-shifting both half Hamiltonians reproduces the scalar factor
    for gamma0, mu, omega in [(0.7, 0.3, 1.9), (1.2, -0.6, 0.9), (0.4, -1.0, 3.3)]:
        spec = DrivingSpec(gamma0=gamma0, mu=mu, omega=omega)
        h_first = passive_shift(h_pt(1.0, gamma0), gamma0)
        h_second = passive_shift(h_pt(1.0, mu * gamma0), abs(mu) * gamma0)
        # exp(-i tau (H - i s 1)) = exp(-s tau) exp(-i tau H)
        step_first = math.exp(-gamma0 * spec.tau) * expm_traceless(
            (h_first.a1, h_first.a2, h_first.a3), spec.tau
        )
        step_second = math.exp(-abs(mu) * gamma0 * spec.tau) * expm_traceless(
            (h_second.a1, h_second.a2, h_second.a3), spec.tau
        )
        np.testing.assert_allclose(
            passive_monodromy(spec), step_second @ step_first, atol=1e-13
        )


def test_classification_agrees_between_active_and_passive():
    rng = np.random.default_rng(37)
    for spec in random_specs(rng, 200, gamma_hi=4.0, omega_lo=0.2, max_growth=30.0):
        active = classify(spec)
        m_passive = passive_monodromy(spec)
        c_passive = amplification_rate(m_passive)
        # normalize the trace by sqrt(det) to undo the loss factor
        half_trace = (m_passive[0, 0] + m_passive[1, 1]) / 2.0
        det = m_passive[0, 0] * m_passive[1, 1] - m_passive[0, 1] * m_passive[1, 0]
        normalized = abs(half_trace) / abs(cmath.sqrt(det))
        if c_passive <= 1e-9:
            phase = PhaseClass.UNBROKEN
        elif abs(normalized - 1.0) <= 1e-9:
            phase = PhaseClass.EXCEPTIONAL
        else:
            phase = PhaseClass.BROKEN
        assert phase is active.phase
