"""Per-window feature computation: 31 time- and frequency-domain features.

Feature order is fixed and shared with the feature-file format:

* per axis (x, y, z): variance, mean, median, 25th percentile, 75th
  percentile (15 values),
* pairwise correlations corr_xy, corr_xz, corr_yz (3),
* average resultant acceleration (1),
* per axis (x, y, z): spectral energy, spectral entropy, centroid
  frequency, peak frequency (12).

Spectral features are computed on the mean-removed signal, so the DC bin is
excluded and a gravity offset cannot dominate them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fourier import fft_radix2
from .signals import Window

_AXES = ("x", "y", "z")

FEATURE_NAMES: tuple[str, ...] = tuple(
    [f"{stat}_{ax}" for ax in _AXES for stat in ("variance", "mean", "median", "p25", "p75")]
    + ["corr_xy", "corr_xz", "corr_yz", "avg_resultant"]
    + [f"{stat}_{ax}" for ax in _AXES
       for stat in ("energy", "entropy", "centroid_freq", "peak_freq")]
)

NUM_FEATURES = len(FEATURE_NAMES)


@dataclass(frozen=True)
class Spectrum:
    """One-sided power spectrum, DC excluded: bins 1..n/2 of an n-point FFT."""

    bin_freqs: np.ndarray
    power: np.ndarray


@dataclass
class FeatureVector:
    values: np.ndarray  # (NUM_FEATURES,)
    label: int


def power_spectrum(window_axis, rate: float) -> Spectrum:
    """Power of the mean-removed signal per frequency bin.

    power[i] = |X_{i+1}|^2 for bins 1..n/2; bin i+1 sits at (i+1)*rate/n Hz,
    so the last bin is the Nyquist frequency.
    """
    x = np.asarray(window_axis, dtype=np.float64)
    n = x.size
    if n < 2 or n & (n - 1):
        raise ValueError(f"window length must be a power of two >= 2, got {n}")
    spec = fft_radix2(x - x.mean())
    power = np.abs(spec[1:n // 2 + 1]) ** 2
    bin_freqs = np.arange(1, n // 2 + 1) * (rate / n)
    return Spectrum(bin_freqs, power)


def _pearson(a: np.ndarray, b: np.ndarray) -> float:
    # Zero by convention when either input is constant.
    va = np.var(a)
    vb = np.var(b)
    if va == 0.0 or vb == 0.0:
        return 0.0
    cov = np.mean((a - a.mean()) * (b - b.mean()))
    r = cov / (np.sqrt(va) * np.sqrt(vb))
    return float(min(1.0, max(-1.0, r)))


def _spectral_features(spec: Spectrum) -> tuple[float, float, float, float]:
    power = spec.power
    total = power.sum()
    energy = float(total / power.size)
    peak = float(spec.bin_freqs[int(np.argmax(power))])
    if total == 0.0:
        # Degenerate (constant) windows: entropy 0, centroid pinned to the
        # first bin so it stays inside (0, rate/2].
        return energy, 0.0, float(spec.bin_freqs[0]), peak
    p = power / total
    nz = p > 0
    entropy = float(-np.sum(p[nz] * np.log(p[nz])))
    centroid = float(np.sum(spec.bin_freqs * p))
    return energy, entropy, centroid, peak


def extract_features(window: Window, rate: float) -> FeatureVector:
    """Compute the 31 canonical features of one window.

    Degenerate windows are handled by convention (zero variance, zero
    correlation, zero spectral energy and entropy) and never produce NaN.
    """
    samples = np.asarray(window.samples, dtype=np.float64)
    values = np.empty(NUM_FEATURES)
    pos = 0
    for axis in range(3):
        s = samples[:, axis]
        values[pos:pos + 5] = (
            np.var(s),
            np.mean(s),
            np.median(s),
            np.percentile(s, 25),
            np.percentile(s, 75),
        )
        pos += 5
    values[15] = _pearson(samples[:, 0], samples[:, 1])
    values[16] = _pearson(samples[:, 0], samples[:, 2])
    values[17] = _pearson(samples[:, 1], samples[:, 2])
    values[18] = np.mean(np.sqrt((samples ** 2).sum(axis=1)))
    pos = 19
    for axis in range(3):
        values[pos:pos + 4] = _spectral_features(power_spectrum(samples[:, axis], rate))
        pos += 4
    return FeatureVector(values, window.label)


def feature_matrix(windows, rate: float) -> tuple[np.ndarray, np.ndarray]:
    """Featurize a window list into an (n, 31) matrix and a label vector."""
    if not windows:
        return np.empty((0, NUM_FEATURES)), np.empty(0, dtype=np.int64)
    vecs = [extract_features(w, rate) for w in windows]
    return np.stack([v.values for v in vecs]), np.array([v.label for v in vecs], dtype=np.int64)


class Standardizer:
    """Per-feature z-scoring with statistics learned from a training set.

    Columns with zero variance are mapped to zero so downstream distance
    computations cannot blow up on constant features.
    """

    def __init__(self):
        self.mean_ = None
        self.std_ = None

    def fit(self, X) -> "Standardizer":
        X = np.asarray(X, dtype=np.float64)
        if X.ndim != 2 or X.shape[0] < 2:
            raise ValueError("standardization needs at least 2 feature vectors")
        self.mean_ = X.mean(axis=0)
        self.std_ = X.std(axis=0)
        return self

    def transform(self, X) -> np.ndarray:
        if self.mean_ is None:
            raise RuntimeError("Standardizer used before fit")
        X = np.asarray(X, dtype=np.float64)
        safe = np.where(self.std_ > 0, self.std_, 1.0)
        out = (X - self.mean_) / safe
        out[:, self.std_ == 0] = 0.0
        return out

    def fit_transform(self, X) -> np.ndarray:
        return self.fit(X).transform(X)


def standardize(X) -> tuple[np.ndarray, Standardizer]:
    """Z-score a feature matrix; returns the transformed data and the record."""
    scaler = Standardizer().fit(X)
    return scaler.transform(X), scaler
