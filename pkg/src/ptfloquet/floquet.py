"""One-period propagator, quasienergies and PT-phase classification.

The drive is piecewise constant, so the one-period propagator is a product
of two closed-form exponentials.  Everything here is a pure function of the
drive parameters; the grid sweep engine calls the same scalar kernel, cell
by cell, from multiple processes.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .model import DrivingSpec, PhaseClass
from .pauli import SERIES_CUTOFF, quadratic_roots

DEFAULT_TOL = 1e-9

# phase codes used by the sweep engine's compact grids
UNBROKEN_CODE, BROKEN_CODE, EXCEPTIONAL_CODE = 0, 1, 2
PHASE_BY_CODE = (PhaseClass.UNBROKEN, PhaseClass.BROKEN, PhaseClass.EXCEPTIONAL)

_ONE_MINUS_ULP = math.nextafter(1.0, 0.0)


@dataclass(frozen=True)
class FloquetResult:
    """Classification of one drive: monodromy operator, its eigenvalue pair
    (|g_plus| >= |g_minus|, product 1), the quasienergy representative with
    Re in [0, omega/2] and Im >= 0, the amplification rate c and the phase.
    """

    monodromy: np.ndarray
    g_plus: complex
    g_minus: complex
    eps_f: complex
    c: float
    phase: PhaseClass


def _half_step_entries(J, gamma, tau):
    """Entries (m00, m01, m11) of the half-period propagator
    exp(-i tau (-J sx + i gamma sz)); the off-diagonal is symmetric."""
    rr = J * J - gamma * gamma
    r = math.sqrt(rr) if rr >= 0.0 else 1j * math.sqrt(-rr)
    x = r * tau
    if abs(x) < SERIES_CUTOFF:
        x2 = x * x
        s = tau * (1.0 - x2 / 6.0 + x2 * x2 / 120.0)
    else:
        s = cmath.sin(x) / r
    c = cmath.cos(x)
    g = gamma * s
    return (c + g, 1j * J * s, c - g)


def _monodromy_entries(J, gamma0, mu, omega):
    """Entries of G(T) = G_minus(tau) G_plus(tau); the gamma0 half acts first."""
    tau = math.pi / omega
    a00, a01, a11 = _half_step_entries(J, gamma0, tau)
    b00, b01, b11 = _half_step_entries(J, mu * gamma0, tau)
    return (
        b00 * a00 + b01 * a01,
        b00 * a01 + b01 * a11,
        b01 * a00 + b11 * a01,
        b01 * a01 + b11 * a11,
    )


def _amp_rate(mod_plus, mod_minus):
    """(|g+| - |g-|)/(|g+| + |g-|), kept inside [0, 1) against rounding
    and against underflow of the contracting eigenvalue."""
    if math.isinf(mod_plus):
        return _ONE_MINUS_ULP
    if mod_plus == 0.0:
        return 0.0  # doubly degenerate zero spectrum
    c = (mod_plus - mod_minus) / (mod_plus + mod_minus)
    if c < 0.0:
        return 0.0
    if c >= 1.0:
        return _ONE_MINUS_ULP
    return c


def _phase_code(c, half_trace, tol):
    # an exceptional verdict only makes sense once c has ruled out the
    # unbroken side, where |tr/2| = 1 also occurs at harmless band touchings
    if c <= tol:
        return UNBROKEN_CODE
    if abs(abs(half_trace) - 1.0) <= tol:
        return EXCEPTIONAL_CODE
    return BROKEN_CODE


def _evaluate(J, gamma0, mu, omega, tol):
    """Scalar kernel shared by classify and the sweep engine.

    The eigenvalue pair uses the structural determinant 1 (exact for this
    product of unit-determinant factors) instead of re-deriving it from the
    entries, whose cancellation noise grows like the squared entry scale
    and would scramble strongly amplifying cells.
    """
    m00, m01, m10, m11 = _monodromy_entries(J, gamma0, mu, omega)
    half_trace = 0.5 * (m00 + m11)
    g_plus, g_minus = quadratic_roots(half_trace, 1.0 + 0j)
    c = _amp_rate(abs(g_plus), abs(g_minus))
    code = _phase_code(c, half_trace, tol)
    return m00, m01, m10, m11, g_plus, g_minus, half_trace, c, code


def monodromy(spec: DrivingSpec) -> np.ndarray:
    """One-period propagator of the two-step drive (unit determinant)."""
    m00, m01, m10, m11 = _monodromy_entries(spec.J, spec.gamma0, spec.mu, spec.omega)
    return np.array([[m00, m01], [m10, m11]])


def passive_monodromy(spec: DrivingSpec) -> np.ndarray:
    """One-period propagator of the loss-only twin of the drive.

    Identity-shifting both half-step Hamiltonians by their loss offsets
    multiplies the active propagator by the overall decay factor
    exp(-(|mu| + 1) gamma0 T / 2); eigenvalue ratios, and hence the
    amplification rate, are unchanged.
    """
    factor = math.exp(-(abs(spec.mu) + 1.0) * spec.gamma0 * spec.period / 2.0)
    return factor * monodromy(spec)


def quasienergy(m, tau) -> complex:
    """Floquet quasienergy eps_f with cos(2 eps_f tau) = tr(m)/2.

    m must have unit determinant (the two quasienergies are then +-eps_f
    modulo omega = pi/tau).  The returned representative has Im >= 0 (the
    amplified mode); for the real traces produced by this drive its real
    part lies in the half zone [0, omega/2].
    """
    m = np.asarray(m, dtype=complex)
    half_trace = complex(m[0, 0] + m[1, 1]) / 2.0
    return _quasienergy_from_half_trace(half_trace, tau)


def _quasienergy_from_half_trace(half_trace, tau):
    eps = cmath.acos(half_trace) / (2.0 * tau)
    if eps.imag < 0.0:
        eps = -eps
    omega = math.pi / tau
    re = eps.real - omega * math.floor(eps.real / omega)
    if re > omega / 2.0 and eps.imag == 0.0:
        # reflecting a strictly complex eps would flip its imaginary part,
        # so only purely real representatives are folded back
        re = omega - re
    return complex(re + 0.0, eps.imag + 0.0)  # + 0.0 normalizes -0.0


def amplification_rate(m) -> float:
    """Normalized eigenvalue-modulus asymmetry of an invertible matrix.

    Zero when both eigenvalues share one modulus (bounded dynamics) and
    invariant under rescaling m by any nonzero complex number.
    """
    m = np.asarray(m, dtype=complex)
    half_trace = complex(m[0, 0] + m[1, 1]) / 2.0
    det = complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
    g_plus, g_minus = quadratic_roots(half_trace, det)
    return _amp_rate(abs(g_plus), abs(g_minus))


def classify(spec: DrivingSpec, tol: float = DEFAULT_TOL) -> FloquetResult:
    """Monodromy, eigenvalues, quasienergy, amplification rate and phase.

    Unbroken when c <= tol; otherwise Exceptional if |tr/2| sits within tol
    of 1 (the boundary set), else Broken.
    """
    if not tol > 0:
        raise ValueError(f"classification tolerance must be positive, got {tol}")
    m00, m01, m10, m11, g_plus, g_minus, half_trace, c, code = _evaluate(
        spec.J, spec.gamma0, spec.mu, spec.omega, tol
    )
    eps_f = _quasienergy_from_half_trace(half_trace, spec.tau)
    return FloquetResult(
        monodromy=np.array([[m00, m01], [m10, m11]]),
        g_plus=g_plus,
        g_minus=g_minus,
        eps_f=eps_f,
        c=c,
        phase=PHASE_BY_CODE[code],
    )
