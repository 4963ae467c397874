"""Amplitude-stream preprocessing and features.

The amplitude of one antenna pair is denoised per subcarrier with a weighted
moving average, collapsed to its first principal component across the 30
subcarriers, and summarized by the level-3 Haar approximation coefficients,
L2-normalized. Feature length scales with trace length, which is why the
amplitude classifier uses an elastic (DTW) kernel downstream.
"""

from __future__ import annotations

import numpy as np

from .errors import InsufficientDataError
from .model import CsiTrace, amplitude_matrix

SQRT2 = np.sqrt(2.0)


def wma_filter(series, m: int = 10) -> np.ndarray:
    """Weighted moving average with linearly decaying weights m, m-1, .., 1.

    out[t] = (m*x[t] + (m-1)*x[t-1] + ... + 1*x[t-m+1]) / (m(m+1)/2).
    The first m-1 samples use the available prefix with truncated weights
    (t+1, t, .., 1), so output length equals input length.
    """
    if m < 1:
        raise ValueError(f"window m must be >= 1, got {m}")
    x = np.asarray(series, dtype=float)
    if x.size == 0:
        return x.copy()
    weights = np.arange(m, 0, -1, dtype=float)
    out = np.convolve(x, weights)[: x.size] / (m * (m + 1) / 2.0)
    for t in range(min(m - 1, x.size)):
        w = np.arange(t + 1, 0, -1, dtype=float)
        out[t] = (w * x[t::-1]).sum() / ((t + 1) * (t + 2) / 2.0)
    return out


def first_principal_component(amp) -> np.ndarray:
    """Project a (T, d) matrix onto its leading covariance eigenvector.

    Columns are mean-centered first; the component's sign is fixed so the
    loading with the largest magnitude is positive.
    """
    amp = np.asarray(amp, dtype=float)
    if amp.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {amp.shape}")
    if amp.shape[0] < 2:
        raise InsufficientDataError(f"PCA needs at least 2 rows, got {amp.shape[0]}")
    centered = amp - amp.mean(axis=0)
    cov = centered.T @ centered / (amp.shape[0] - 1)
    eigvals, eigvecs = np.linalg.eigh(cov)
    w = eigvecs[:, -1]
    if w[np.argmax(np.abs(w))] < 0:
        w = -w
    return centered @ w


def haar_decompose(series, levels: int = 3):
    """Repeated orthonormal Haar analysis of the approximation branch.

    Each level maps pairs (a, b) to approximation (a+b)/sqrt(2) and detail
    (a-b)/sqrt(2); an odd-length stage drops its final unpaired sample.
    Returns (approximation, [detail per level], [dropped samples]); energy
    satisfies ||x||^2 == ||approx||^2 + sum ||detail||^2 + sum dropped^2.
    """
    if levels < 1:
        raise ValueError(f"levels must be >= 1, got {levels}")
    x = np.asarray(series, dtype=float)
    if x.size < 2**levels:
        raise InsufficientDataError(f"{levels}-level decomposition needs at least {2**levels} samples, got {x.size}")
    details = []
    dropped = []
    for _ in range(levels):
        if x.size % 2:
            dropped.append(x[-1])
            x = x[:-1]
        a, b = x[0::2], x[1::2]
        details.append((a - b) / SQRT2)
        x = (a + b) / SQRT2
    return x, details, np.array(dropped)


def haar_dwt_features(series, levels: int = 3) -> np.ndarray:
    """Last-layer Haar approximation coefficients, L2-normalized.

    An all-zero signal maps to an all-zero feature; anything else comes out
    with unit norm.
    """
    approx, _, _ = haar_decompose(series, levels)
    norm = np.linalg.norm(approx)
    return approx / norm if norm > 0 else approx.copy()


def amplitude_feature(
    trace: CsiTrace,
    tx: int = 0,
    rx: int = 0,
    wma_window: int = 10,
    dwt_levels: int = 3,
) -> np.ndarray:
    """Full amplitude pipeline: WMA per subcarrier, PCA, Haar features."""
    amp = amplitude_matrix(trace, tx, rx)
    filtered = np.column_stack([wma_filter(amp[:, j], wma_window) for j in range(amp.shape[1])])
    component = first_principal_component(filtered)
    return haar_dwt_features(component, dwt_levels)
