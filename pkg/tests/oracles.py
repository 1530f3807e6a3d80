"""Independent reference implementations used to verify the main code paths.

Everything here is written straight from definitions (naive DFT matrix,
manual order statistics, per-query neighbor sort, dense QP) and must stay
decoupled from the library internals it checks.
"""

from __future__ import annotations

import math
from collections import Counter

import numpy as np


def naive_dft(x) -> np.ndarray:
    """O(n^2) DFT from the definition X_k = sum_t x_t exp(-2pi i k t / n)."""
    x = np.asarray(x, dtype=np.complex128)
    n = x.size
    k = np.arange(n)
    return np.exp(-2j * np.pi * np.outer(k, k) / n) @ x


def percentile_linear(values, q: float) -> float:
    """Linear-interpolated order statistic, q in [0, 100]."""
    s = sorted(float(v) for v in values)
    n = len(s)
    h = (n - 1) * q / 100.0
    lo = int(math.floor(h))
    if lo + 1 >= n:
        return s[-1]
    frac = h - lo
    return s[lo] + frac * (s[lo + 1] - s[lo])


def _axis_spectral(x, rate: float) -> tuple[float, float, float, float]:
    x = np.asarray(x, dtype=np.float64)
    n = x.size
    centered = x - sum(x) / n
    spec = naive_dft(centered)
    power = [abs(spec[i]) ** 2 for i in range(1, n // 2 + 1)]
    freqs = [i * rate / n for i in range(1, n // 2 + 1)]
    total = sum(power)
    energy = total / len(power)
    peak_idx = 0
    for i, p in enumerate(power):
        if p > power[peak_idx]:
            peak_idx = i
    peak = freqs[peak_idx]
    if total == 0.0:
        return energy, 0.0, freqs[0], peak
    entropy = 0.0
    centroid = 0.0
    for f, p in zip(freqs, power):
        pi = p / total
        if pi > 0:
            entropy -= pi * math.log(pi)
        centroid += f * pi
    return energy, entropy, centroid, peak


def oracle_features(samples, rate: float) -> np.ndarray:
    """All 31 features of one (256, 3) window, straight from definitions."""
    samples = np.asarray(samples, dtype=np.float64)
    n = samples.shape[0]
    out = []
    for axis in range(3):
        s = samples[:, axis]
        mean = float(sum(s) / n)
        var = float(sum((v - mean) ** 2 for v in s) / n)
        out += [var, mean, percentile_linear(s, 50), percentile_linear(s, 25),
                percentile_linear(s, 75)]
    for a, b in ((0, 1), (0, 2), (1, 2)):
        sa, sb = samples[:, a], samples[:, b]
        ma, mb = sum(sa) / n, sum(sb) / n
        va = sum((v - ma) ** 2 for v in sa) / n
        vb = sum((v - mb) ** 2 for v in sb) / n
        if va == 0.0 or vb == 0.0:
            out.append(0.0)
        else:
            cov = sum((p - ma) * (q - mb) for p, q in zip(sa, sb)) / n
            out.append(cov / (math.sqrt(va) * math.sqrt(vb)))
    out.append(float(sum(math.sqrt(x * x + y * y + z * z)
                         for x, y, z in samples) / n))
    for axis in range(3):
        out.extend(_axis_spectral(samples[:, axis], rate))
    return np.array(out)


def brute_knn_predict(train, labels, query, k: int) -> int:
    """Plain all-pairs sort and vote with explicit tie handling."""
    train = np.asarray(train, dtype=np.float64)
    labels = np.asarray(labels, dtype=np.int64)
    query = np.asarray(query, dtype=np.float64)
    d2 = ((train - query) ** 2).sum(axis=1)
    order = sorted(range(train.shape[0]), key=lambda i: (d2[i], i))[:k]
    votes = [int(labels[i]) for i in order]
    counts = Counter(votes)
    top = max(counts.values())
    tied = {cls for cls, cnt in counts.items() if cnt == top}
    if len(tied) == 1:
        return tied.pop()
    for lbl in votes:  # nearest neighbor among tied classes
        if lbl in tied:
            return lbl
    raise AssertionError("unreachable")


def solve_svm_dual_qp(K, y, c_box: float) -> np.ndarray:
    """Dense QP solution of the soft-margin SVM dual (interior point)."""
    import cvxopt

    K = np.asarray(K, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    n = y.size
    P = cvxopt.matrix(np.outer(y, y) * K)
    q = cvxopt.matrix(-np.ones(n))
    G = cvxopt.matrix(np.vstack([-np.eye(n), np.eye(n)]))
    h = cvxopt.matrix(np.hstack([np.zeros(n), np.full(n, c_box)]))
    A = cvxopt.matrix(y.reshape(1, n))
    b = cvxopt.matrix(0.0)
    cvxopt.solvers.options["show_progress"] = False
    sol = cvxopt.solvers.qp(P, q, G, h, A, b)
    return np.array(sol["x"]).ravel()


def svm_dual_objective(alpha, K, y) -> float:
    alpha = np.asarray(alpha, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    ay = alpha * y
    return float(alpha.sum() - 0.5 * ay @ np.asarray(K) @ ay)


def gauss_cdf(x: float) -> float:
    return 0.5 * (1.0 + math.erf(x / math.sqrt(2.0)))
