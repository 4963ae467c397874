"""Core CSI domain types: complex channel samples, frames, traces, labels.

A frame holds one packet's channel matrix: ``ntx x nrx`` antenna pairs times
30 OFDM subcarriers, each entry a complex gain. A trace is the time series of
frames for one activity sample. Everything here is immutable after
construction and free of I/O.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

N_SUBCARRIERS = 30


class ActivityLabel(enum.IntEnum):
    """The six recognized activities, with stable codes 0-5."""

    BEND = 0
    HAND_CLAP = 1
    WALK = 2
    PHONE_CALL = 3
    SIT_DOWN = 4
    SQUAT = 5

    @property
    def canonical_name(self) -> str:
        return self.name.lower()

    @classmethod
    def from_name(cls, name: str) -> "ActivityLabel":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            valid = ", ".join(lbl.canonical_name for lbl in cls)
            raise ValueError(f"unknown activity label '{name}' (expected one of: {valid})") from None


LABEL_NAMES = tuple(lbl.canonical_name for lbl in ActivityLabel)
N_CLASSES = len(ActivityLabel)


@dataclass(frozen=True)
class ComplexSample:
    """One complex channel gain."""

    re: float
    im: float

    def amplitude(self) -> float:
        return math.hypot(self.re, self.im)

    def phase(self) -> float:
        """Angle in [-pi, pi] (atan2 convention)."""
        return math.atan2(self.im, self.re)


@dataclass(frozen=True)
class SubcarrierIndexSet:
    """The 30 signed subcarrier indices reported per antenna pair.

    Indices run -28..28; which 30 of the 57 slots are populated is
    configurable because the calibration math is sensitive to whether the set
    sums to zero.
    """

    k: tuple[int, ...]
    n_fft: int = 64

    def __post_init__(self):
        if len(self.k) != N_SUBCARRIERS:
            raise ValueError(f"subcarrier index set must have {N_SUBCARRIERS} entries, got {len(self.k)}")
        if any(b <= a for a, b in zip(self.k, self.k[1:])):
            raise ValueError("subcarrier indices must be strictly increasing")
        if self.k[0] != -28 or self.k[-1] != 28:
            raise ValueError("subcarrier indices must span -28..28")
        if self.n_fft <= 0:
            raise ValueError("FFT size must be positive")
        object.__setattr__(self, "k", tuple(int(v) for v in self.k))

    @classmethod
    def standard(cls) -> "SubcarrierIndexSet":
        """802.11n 20 MHz 30-group set used by the Intel 5300. Sums to 13."""
        neg = tuple(range(-28, -1, 2)) + (-1,)
        pos = tuple(range(1, 28, 2)) + (28,)
        return cls(neg + pos)

    @classmethod
    def symmetric(cls) -> "SubcarrierIndexSet":
        """A zero-sum variant (every index paired with its negative)."""
        neg = tuple(range(-28, -1, 2)) + (-1,)
        pos = tuple(-v for v in reversed(neg))
        return cls(neg + pos)

    @property
    def as_array(self) -> np.ndarray:
        return np.array(self.k, dtype=float)

    @property
    def total(self) -> int:
        return sum(self.k)


STANDARD_SUBCARRIERS = SubcarrierIndexSet.standard()


@dataclass(frozen=True)
class CsiFrame:
    """One packet's channel state: complex matrix of shape (ntx, nrx, 30).

    ``rssi`` is the optional per-antenna received power triple in dB.
    """

    timestamp: float
    csi: np.ndarray
    rssi: tuple[float, float, float] | None = None

    def __post_init__(self):
        csi = np.asarray(self.csi, dtype=np.complex128)
        if csi.ndim != 3 or csi.shape[2] != N_SUBCARRIERS:
            raise ValueError(f"csi must have shape (ntx, nrx, {N_SUBCARRIERS}), got {csi.shape}")
        ntx, nrx, _ = csi.shape
        if not (1 <= ntx <= 3 and 1 <= nrx <= 3):
            raise ValueError(f"antenna counts must be 1..3, got ntx={ntx}, nrx={nrx}")
        csi = csi.copy()
        csi.setflags(write=False)
        object.__setattr__(self, "csi", csi)
        if self.rssi is not None:
            object.__setattr__(self, "rssi", tuple(float(v) for v in self.rssi))

    @property
    def ntx(self) -> int:
        return self.csi.shape[0]

    @property
    def nrx(self) -> int:
        return self.csi.shape[1]


@dataclass(frozen=True)
class CsiTrace:
    """Time-ordered frames of one activity sample."""

    frames: tuple[CsiFrame, ...]
    label: ActivityLabel | None = None
    subject_id: str | None = None
    sample_rate: float = 30.0

    def __post_init__(self):
        frames = tuple(self.frames)
        if not frames:
            raise ValueError("a trace needs at least one frame")
        ts = [f.timestamp for f in frames]
        if any(b <= a for a, b in zip(ts, ts[1:])):
            raise ValueError("frame timestamps must be strictly increasing")
        shapes = {(f.ntx, f.nrx) for f in frames}
        if len(shapes) > 1:
            raise ValueError(f"all frames must share one antenna geometry, got {sorted(shapes)}")
        if self.sample_rate <= 0:
            raise ValueError("sample rate must be positive")
        object.__setattr__(self, "frames", frames)

    def __len__(self) -> int:
        return len(self.frames)

    @property
    def ntx(self) -> int:
        return self.frames[0].ntx

    @property
    def nrx(self) -> int:
        return self.frames[0].nrx


def _check_antenna(trace: CsiTrace, tx: int, rx: int) -> None:
    if not (0 <= tx < trace.ntx):
        raise IndexError(f"tx index {tx} out of range for ntx={trace.ntx}")
    if not (0 <= rx < trace.nrx):
        raise IndexError(f"rx index {rx} out of range for nrx={trace.nrx}")


def csi_tensor(trace: CsiTrace) -> np.ndarray:
    """Stack a trace's frames into a (T, ntx, nrx, 30) complex array."""
    return np.stack([f.csi for f in trace.frames])


def amplitude_matrix(trace: CsiTrace, tx: int = 0, rx: int = 0) -> np.ndarray:
    """Per-frame amplitudes of one antenna pair, shape (T, 30)."""
    _check_antenna(trace, tx, rx)
    return np.abs(np.stack([f.csi[tx, rx, :] for f in trace.frames]))


def phase_matrix(trace: CsiTrace, tx: int = 0, rx: int = 0) -> np.ndarray:
    """Per-frame raw phases of one antenna pair, shape (T, 30), in [-pi, pi]."""
    _check_antenna(trace, tx, rx)
    return np.angle(np.stack([f.csi[tx, rx, :] for f in trace.frames]))
