"""Dense phase-diagram sweeps over (gamma0, omega) and 1-D threshold scans.

Cells are independent tasks: each worker fills pre-assigned rows of the
output arrays with results from the same scalar kernel that classify uses,
so the grid is bit-identical for any worker count, including the serial
debugging path (workers=1).
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import BracketError
from .floquet import BROKEN_CODE, DEFAULT_TOL, PHASE_BY_CODE, _evaluate
from .model import DrivingSpec, PhaseClass

THREADS_ENV_VAR = "PT_FLOQUET_THREADS"


@dataclass(frozen=True)
class PhaseGrid:
    """Rectangular sweep result, gamma-major.

    classes holds compact int8 codes; PHASE_BY_CODE (or phase_at) maps them
    back to PhaseClass.  A cell is Unbroken exactly when its c <= tol.
    """

    gamma_axis: np.ndarray
    omega_axis: np.ndarray
    mu: float
    J: float
    tol: float
    c_values: np.ndarray
    classes: np.ndarray
    trace_half: np.ndarray

    def phase_at(self, gamma_index: int, omega_index: int) -> PhaseClass:
        return PHASE_BY_CODE[self.classes[gamma_index, omega_index]]

    @property
    def shape(self):
        return self.c_values.shape


def grid_axis(lo, hi, count) -> np.ndarray:
    """Exact interpolation nodes lo + k*(hi - lo)/(count - 1).

    Written index-by-index (no running sums) so refined grids share bit
    patterns with coarse ones on the common nodes.
    """
    return np.array([lo + k * (hi - lo) / (count - 1) for k in range(count)])


def resolve_workers(workers=None) -> int:
    """Worker count: explicit argument, else PT_FLOQUET_THREADS, else one
    per CPU (0 or unset means auto)."""
    if workers is None:
        raw = os.environ.get(THREADS_ENV_VAR, "").strip()
        workers = int(raw) if raw else 0
        if workers == 0:
            workers = os.cpu_count() or 1
    if workers < 1:
        raise ValueError(f"worker count must be >= 1, got {workers}")
    return workers


def _sweep_rows(args):
    """Evaluate a block of gamma rows; returns arrays for pre-assigned slots."""
    J, mu, tol, gamma_block, omega_values = args
    n_rows, n_cols = len(gamma_block), len(omega_values)
    c_block = np.empty((n_rows, n_cols))
    code_block = np.empty((n_rows, n_cols), dtype=np.int8)
    trace_block = np.empty((n_rows, n_cols))
    for i, gamma0 in enumerate(gamma_block):
        for j, omega in enumerate(omega_values):
            *_, half_trace, c, code = _evaluate(J, gamma0, mu, omega, tol)
            c_block[i, j] = c
            code_block[i, j] = code
            trace_block[i, j] = half_trace.real
    return c_block, code_block, trace_block


def sweep_grid(
    mu,
    J,
    gamma_range,
    omega_range,
    tol=DEFAULT_TOL,
    workers=None,
) -> PhaseGrid:
    """Classify every node of a (gamma0, omega) grid.

    gamma_range and omega_range are (lo, hi, count) with count >= 2; the
    omega range must be strictly positive.  Output is independent of the
    evaluation order and of the degree of parallelism.
    """
    g_lo, g_hi, g_count = gamma_range
    o_lo, o_hi, o_count = omega_range
    if g_count < 2 or o_count < 2:
        raise ValueError("grid needs at least 2 nodes per axis")
    if not (g_lo < g_hi and o_lo < o_hi):
        raise ValueError("range lo must be strictly below hi")
    if not tol > 0:
        raise ValueError(f"classification tolerance must be positive, got {tol}")
    # corner specs raise the same validation errors a per-cell construction would
    DrivingSpec(gamma0=g_lo, mu=mu, omega=o_lo, J=J)
    DrivingSpec(gamma0=g_hi, mu=mu, omega=o_hi, J=J)

    gamma_axis = grid_axis(g_lo, g_hi, g_count)
    omega_axis = grid_axis(o_lo, o_hi, o_count)
    omega_values = [float(v) for v in omega_axis]

    c_values = np.empty((g_count, o_count))
    classes = np.empty((g_count, o_count), dtype=np.int8)
    trace_half = np.empty((g_count, o_count))

    n_workers = min(resolve_workers(workers), g_count)
    blocks = _row_blocks(g_count, n_workers)
    tasks = [
        (J, mu, tol, [float(v) for v in gamma_axis[lo:hi]], omega_values)
        for lo, hi in blocks
    ]
    if n_workers == 1:
        results = [_sweep_rows(tasks[0])]
    else:
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            results = list(pool.map(_sweep_rows, tasks))
    for (lo, hi), (c_block, code_block, trace_block) in zip(blocks, results):
        c_values[lo:hi] = c_block
        classes[lo:hi] = code_block
        trace_half[lo:hi] = trace_block

    return PhaseGrid(
        gamma_axis=gamma_axis,
        omega_axis=omega_axis,
        mu=mu,
        J=J,
        tol=tol,
        c_values=c_values,
        classes=classes,
        trace_half=trace_half,
    )


def _row_blocks(n_rows, n_workers):
    """Contiguous row blocks, as even as possible, covering range(n_rows)."""
    base, extra = divmod(n_rows, n_workers)
    blocks = []
    start = 0
    for k in range(n_workers):
        stop = start + base + (1 if k < extra else 0)
        blocks.append((start, stop))
        start = stop
    return blocks


def threshold_scan(
    mu,
    J,
    omega,
    gamma_hint,
    tol=1e-6,
    classify_tol=DEFAULT_TOL,
) -> float:
    """Bisect the breaking threshold in gamma0 at fixed mu and omega.

    gamma_hint = (lo, hi) must straddle the transition monotonically:
    lo classifies away from Broken and hi classifies Broken.  Returns the
    bracket midpoint once its width is <= tol.
    """
    lo, hi = gamma_hint
    if not (0.0 <= lo < hi):
        raise ValueError(f"need 0 <= lo < hi, got ({lo}, {hi})")
    if not tol > 0:
        raise ValueError(f"scan tolerance must be positive, got {tol}")
    if _is_broken(J, lo, mu, omega, classify_tol):
        raise BracketError(f"lower bracket gamma0={lo} already classifies Broken")
    if not _is_broken(J, hi, mu, omega, classify_tol):
        raise BracketError(f"upper bracket gamma0={hi} does not classify Broken")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _is_broken(J, mid, mu, omega, classify_tol):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _is_broken(J, gamma0, mu, omega, tol):
    *_, code = _evaluate(J, gamma0, mu, omega, tol)
    return code == BROKEN_CODE
