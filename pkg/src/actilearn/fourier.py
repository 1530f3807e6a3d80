"""Radix-2 FFT used by the spectral feature computations.

Kept self-contained so the transform can be validated directly against a
naive DFT on small inputs.
"""

from __future__ import annotations

import numpy as np


def _bit_reversal_indices(n: int) -> np.ndarray:
    bits = n.bit_length() - 1
    idx = np.arange(n)
    rev = np.zeros(n, dtype=np.intp)
    for _ in range(bits):
        rev = (rev << 1) | (idx & 1)
        idx >>= 1
    return rev


def fft_radix2(x) -> np.ndarray:
    """Decimation-in-time radix-2 FFT along the last axis.

    Accepts real or complex input; the last-axis length must be a power of
    two. Returns the complex spectrum with numpy's sign convention
    (X_k = sum_t x_t exp(-2πi k t / n)).
    """
    a = np.array(x, dtype=np.complex128)
    n = a.shape[-1]
    if n == 0 or n & (n - 1):
        raise ValueError(f"FFT length must be a power of two, got {n}")
    a = a[..., _bit_reversal_indices(n)]
    half = 1
    while half < n:
        w = np.exp(-1j * np.pi * np.arange(half) / half)
        v = a.reshape(a.shape[:-1] + (n // (2 * half), 2 * half))
        top = v[..., :half].copy()
        bot = v[..., half:] * w
        v[..., :half] = top + bot
        v[..., half:] = top - bot
        half *= 2
    return a
