"""Brute-force time-ordered propagators.

These compose many short closed-form sub-steps instead of the two-factor
product, giving an independent reference for the production path.  They are
validation tools only and never feed the sweep engine.
"""

import numpy as np

from .model import DrivingSpec
from .pauli import expm_traceless


def stepped_propagator(spec: DrivingSpec, steps_per_half: int) -> np.ndarray:
    """Ordered product of 2*steps_per_half sub-interval propagators.

    Sub-intervals never straddle the switch at half period, so the drive is
    constant within each one and the product equals the monodromy up to
    accumulated rounding for any steps_per_half.
    """
    if steps_per_half < 1:
        raise ValueError(f"steps_per_half must be >= 1, got {steps_per_half}")
    dt = spec.tau / steps_per_half
    g00, g01, g10, g11 = 1.0 + 0j, 0j, 0j, 1.0 + 0j
    for gamma in (spec.gamma0, spec.mu * spec.gamma0):
        step = expm_traceless((-spec.J, 0.0, 1j * gamma), dt)
        m00, m01 = complex(step[0, 0]), complex(step[0, 1])
        m10, m11 = complex(step[1, 0]), complex(step[1, 1])
        for _ in range(steps_per_half):
            n00 = m00 * g00 + m01 * g10
            n01 = m00 * g01 + m01 * g11
            n10 = m10 * g00 + m11 * g10
            n11 = m10 * g01 + m11 * g11
            g00, g01, g10, g11 = n00, n01, n10, n11
    return np.array([[g00, g01], [g10, g11]])


def stepped_constant(r, t, steps: int) -> np.ndarray:
    """Ordered product of `steps` equal sub-step exponentials of one
    constant generator r . sigma over total time t."""
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    step = expm_traceless(r, t / steps)
    out = np.eye(2, dtype=complex)
    for _ in range(steps):
        out = step @ out
    return out
