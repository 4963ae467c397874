"""Phase-stream preprocessing and features.

Raw per-subcarrier phase is folded into [-pi, pi] and polluted by the
receiver's packet timing offset (a slope across subcarrier index) plus an
unknown constant offset. The pipeline: unfold the phase, strip the best-fit
linear term, difference two receive antennas, and summarize the resulting
T x 30 matrix by its leading singular values.
"""

from __future__ import annotations

import numpy as np

from .errors import ConfigurationError, InsufficientDataError
from .model import (
    N_SUBCARRIERS,
    STANDARD_SUBCARRIERS,
    CsiTrace,
    SubcarrierIndexSet,
    phase_matrix,
)

N_PHASE_FEATURES = 5


def unwrap(raw, two_sided: bool = False) -> np.ndarray:
    """Undo 2*pi folding along the last axis by the cumulative-jump rule.

    The default corrects only positive jumps greater than pi (the published
    calibration routine is one-sided); ``two_sided=True`` additionally undoes
    negative jumps, matching conventional unwrapping.
    """
    raw = np.asarray(raw, dtype=float)
    if raw.shape[-1] == 0:
        return raw.copy()
    steps = np.diff(raw, axis=-1)
    jumps = (steps > np.pi).astype(np.int64)
    if two_sided:
        jumps -= (steps < -np.pi).astype(np.int64)
    out = raw.copy()
    out[..., 1:] -= 2.0 * np.pi * np.cumsum(jumps, axis=-1)
    return out


def calibrate(
    raw,
    subcarriers: SubcarrierIndexSet = STANDARD_SUBCARRIERS,
    two_sided: bool = False,
) -> np.ndarray:
    """Linear phase calibration along the last axis.

    After unwrapping, subtracts a*k + b where a is the endpoint slope
    (T[29]-T[0])/(k[29]-k[0]) and b is the mean of the unwrapped vector.
    Accepts a single 30-vector or a (T, 30) matrix. The result always
    satisfies out[..., 29] == out[..., 0] and has mean -a * mean(k), so a
    zero-sum subcarrier set yields zero-mean output.
    """
    raw = np.asarray(raw, dtype=float)
    if raw.shape[-1] != N_SUBCARRIERS:
        raise ValueError(f"phase vectors must have {N_SUBCARRIERS} entries, got {raw.shape[-1]}")
    t = unwrap(raw, two_sided=two_sided)
    k = subcarriers.as_array
    a = (t[..., -1] - t[..., 0]) / (k[-1] - k[0])
    b = t.mean(axis=-1)
    return t - a[..., np.newaxis] * k - b[..., np.newaxis]


def phase_difference_matrix(
    trace: CsiTrace,
    rx_a: int = 0,
    rx_b: int = 1,
    tx: int = 0,
    subcarriers: SubcarrierIndexSet = STANDARD_SUBCARRIERS,
    two_sided: bool = False,
) -> np.ndarray:
    """Calibrated phase of antenna ``rx_a`` minus antenna ``rx_b``, (T, 30).

    Each antenna is calibrated independently per frame before differencing.
    """
    if trace.nrx < 2:
        raise ConfigurationError(f"phase differencing needs at least 2 receive antennas, trace has {trace.nrx}")
    pa = calibrate(phase_matrix(trace, tx, rx_a), subcarriers, two_sided=two_sided)
    pb = calibrate(phase_matrix(trace, tx, rx_b), subcarriers, two_sided=two_sided)
    return pa - pb


def phase_feature(
    trace: CsiTrace,
    rx_a: int = 0,
    rx_b: int = 1,
    tx: int = 0,
    subcarriers: SubcarrierIndexSet = STANDARD_SUBCARRIERS,
    two_sided: bool = False,
) -> np.ndarray:
    """Top 5 singular values of the phase-difference matrix, descending."""
    if len(trace) < N_PHASE_FEATURES:
        raise InsufficientDataError(
            f"phase feature needs at least {N_PHASE_FEATURES} frames, trace has {len(trace)}"
        )
    diff = phase_difference_matrix(trace, rx_a, rx_b, tx, subcarriers, two_sided=two_sided)
    singular = np.linalg.svd(diff, compute_uv=False)
    return singular[:N_PHASE_FEATURES]
