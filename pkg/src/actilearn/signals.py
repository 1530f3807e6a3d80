"""Raw accelerometer stream conditioning.

Turns possibly irregular triaxial recordings into uniformly sampled,
low-pass filtered, fixed-size windows ready for feature extraction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .activities import UNLABELED

# Sanity bound on a single acceleration component, in g. Wide enough for
# consumer sensors; anything beyond it is treated as a corrupt row.
MAX_ABS_ACCEL_G = 8.0

WINDOW_SIZE = 256
DEFAULT_RATE_HZ = 50.0
DEFAULT_CUTOFF_HZ = 25.0
DEFAULT_GAP_THRESHOLD_S = 1.0
FIR_TAPS = 31


@dataclass(frozen=True)
class RawSample:
    """One accelerometer reading: time in seconds, acceleration in g."""

    timestamp: float
    accel: tuple[float, float, float]
    label: int = UNLABELED


class RawStream:
    """Columnar view of one contiguous recording.

    Rejects corrupt rows (non-finite values or components beyond
    ``MAX_ABS_ACCEL_G``) at construction, naming the offending row.
    Timestamp monotonicity is checked later by :func:`resample_uniform`.
    """

    def __init__(self, timestamps, values, labels=None):
        self.timestamps = np.asarray(timestamps, dtype=np.float64)
        self.values = np.asarray(values, dtype=np.float64)
        n = self.timestamps.size
        if self.values.shape != (n, 3):
            raise ValueError(f"values must have shape ({n}, 3), got {self.values.shape}")
        if labels is None:
            self.labels = np.full(n, UNLABELED, dtype=np.int64)
        else:
            self.labels = np.asarray(labels, dtype=np.int64)
            if self.labels.shape != (n,):
                raise ValueError(f"labels must have shape ({n},), got {self.labels.shape}")
        if not np.all(np.isfinite(self.timestamps)):
            bad = int(np.flatnonzero(~np.isfinite(self.timestamps))[0])
            raise ValueError(f"non-finite timestamp at row {bad}")
        finite = np.isfinite(self.values).all(axis=1)
        in_range = (np.abs(self.values) <= MAX_ABS_ACCEL_G).all(axis=1)
        ok = finite & in_range
        if not ok.all():
            bad = int(np.flatnonzero(~ok)[0])
            raise ValueError(
                f"corrupt acceleration at row {bad}: values {self.values[bad].tolist()} "
                f"(must be finite and within +/-{MAX_ABS_ACCEL_G} g)"
            )

    @classmethod
    def from_samples(cls, samples) -> "RawStream":
        samples = list(samples)
        return cls(
            [s.timestamp for s in samples],
            [s.accel for s in samples],
            [s.label for s in samples],
        )

    def __len__(self) -> int:
        return int(self.timestamps.size)


@dataclass
class UniformSeries:
    """Triaxial acceleration on a uniform time grid."""

    start_time: float
    rate: float
    values: np.ndarray  # (n, 3)
    labels: np.ndarray  # (n,)

    def __len__(self) -> int:
        return int(self.values.shape[0])

    def times(self) -> np.ndarray:
        return self.start_time + np.arange(len(self)) / self.rate


@dataclass
class Window:
    """A fixed-size single-label slice of a uniform series."""

    samples: np.ndarray  # (size, 3)
    label: int
    origin: tuple[int, int]  # (stream id, start index)


def _nearest_indices(grid: np.ndarray, t: np.ndarray) -> np.ndarray:
    # Nearest raw sample per grid point; equidistant pairs resolve to the
    # earlier sample.
    right = np.searchsorted(t, grid)
    right = np.clip(right, 0, t.size - 1)
    left = np.clip(right - 1, 0, t.size - 1)
    pick_left = (grid - t[left]) <= (t[right] - grid)
    return np.where(pick_left, left, right)


def resample_uniform(stream: RawStream, rate: float = DEFAULT_RATE_HZ,
                     gap_threshold: float = DEFAULT_GAP_THRESHOLD_S) -> list[UniformSeries]:
    """Resample a raw stream onto uniform grids at ``rate``.

    Values are linearly interpolated between the surrounding raw samples;
    labels are copied from the nearest raw sample in time. Any inter-sample
    gap larger than ``gap_threshold`` seconds splits the stream, so no values
    are fabricated across dropouts. An empty stream yields an empty list.
    """
    if rate <= 0:
        raise ValueError(f"rate must be positive, got {rate}")
    if gap_threshold <= 0:
        raise ValueError(f"gap_threshold must be positive, got {gap_threshold}")
    t = stream.timestamps
    if t.size == 0:
        return []
    dt = np.diff(t)
    decreasing = np.flatnonzero(dt < 0)
    if decreasing.size:
        i = int(decreasing[0]) + 1
        raise ValueError(f"timestamps must be non-decreasing; sample {i} "
                         f"({t[i]:.6f}s) precedes sample {i - 1} ({t[i - 1]:.6f}s)")
    boundaries = np.flatnonzero(dt > gap_threshold) + 1
    out: list[UniformSeries] = []
    for seg in np.split(np.arange(t.size), boundaries):
        tseg = t[seg]
        t0, t1 = tseg[0], tseg[-1]
        # Small forward tolerance so a grid point that lands on the final raw
        # sample survives float rounding.
        n = int(np.floor((t1 - t0) * rate + 1e-9)) + 1
        grid = t0 + np.arange(n) / rate
        vals = np.empty((n, 3))
        for axis in range(3):
            vals[:, axis] = np.interp(grid, tseg, stream.values[seg, axis])
        labels = stream.labels[seg][_nearest_indices(grid, tseg)]
        out.append(UniformSeries(float(t0), float(rate), vals, labels))
    return out


def design_lowpass_kernel(cutoff: float, rate: float, taps: int = FIR_TAPS) -> np.ndarray:
    """Hamming-windowed sinc low-pass kernel, normalized to unit DC gain."""
    if taps < 3 or taps % 2 == 0:
        raise ValueError(f"taps must be an odd count >= 3, got {taps}")
    m = np.arange(taps) - (taps - 1) / 2
    fc = cutoff / rate  # cycles per sample
    h = 2 * fc * np.sinc(2 * fc * m)
    h *= 0.54 - 0.46 * np.cos(2 * np.pi * np.arange(taps) / (taps - 1))
    return h / h.sum()


def lowpass_filter(series: UniformSeries, cutoff: float = DEFAULT_CUTOFF_HZ) -> UniformSeries:
    """Low-pass filter each axis with a delay-compensated FIR kernel.

    The kernel is a 31-tap Hamming-windowed sinc; output length equals input
    length (edges are handled by replicating the end samples). A cutoff at
    the Nyquist frequency degenerates to the identity kernel.
    """
    if not 0 < cutoff <= series.rate / 2:
        raise ValueError(f"cutoff must lie in (0, {series.rate / 2}] Hz, got {cutoff}")
    n = len(series)
    if n == 0:
        return UniformSeries(series.start_time, series.rate,
                             series.values.copy(), series.labels.copy())
    h = design_lowpass_kernel(cutoff, series.rate)
    half = (h.size - 1) // 2
    out = np.empty_like(series.values)
    for axis in range(3):
        padded = np.pad(series.values[:, axis], half, mode="edge")
        out[:, axis] = np.convolve(padded, h, mode="valid")
    return UniformSeries(series.start_time, series.rate, out, series.labels.copy())


def make_windows(series: UniformSeries, size: int = WINDOW_SIZE,
                 overlap_fraction: float = 0.0, stream_id: int = 0) -> list[Window]:
    """Cut a uniform series into fixed-size windows.

    ``size`` must be a power of two (the spectral features require it).
    Windows start every ``round(size * (1 - overlap_fraction))`` samples; a
    trailing partial window is dropped, and so is any window spanning more
    than one label.
    """
    if size < 2 or size & (size - 1):
        raise ValueError(f"window size must be a power of two >= 2, got {size}")
    if not 0 <= overlap_fraction < 1:
        raise ValueError(f"overlap_fraction must lie in [0, 1), got {overlap_fraction}")
    stride = max(1, int(round(size * (1 - overlap_fraction))))
    windows: list[Window] = []
    for start in range(0, len(series) - size + 1, stride):
        labels = series.labels[start:start + size]
        if (labels != labels[0]).any():
            continue
        windows.append(Window(series.values[start:start + size].copy(),
                              int(labels[0]), (stream_id, start)))
    return windows
