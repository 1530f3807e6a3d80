"""Quadratic (per-class Gaussian) classifier."""

from __future__ import annotations

import numpy as np


def _regularize(cov: np.ndarray, base_reg: float) -> tuple[np.ndarray, np.ndarray, float]:
    """Add ridge lam*I, growing lam tenfold until the Cholesky succeeds."""
    d = cov.shape[0]
    lam = base_reg * np.trace(cov) / d
    if lam <= 0:
        lam = 1e-12
    while True:
        try:
            chol = np.linalg.cholesky(cov + lam * np.eye(d))
            return cov + lam * np.eye(d), chol, lam
        except np.linalg.LinAlgError:
            lam *= 10


class QdaClassifier:
    """Gaussian class-conditional model with quadratic decision boundaries.

    Per class i the discriminant is
        g_i(x) = -0.5 (x-mu_i)' inv(Sigma_i) (x-mu_i) - 0.5 log|Sigma_i| + log P_i
    with mu_i / Sigma_i the class sample mean and (population) covariance and
    P_i the class frequency. Covariances are ridge-regularized so the model
    stays usable on degenerate data.
    """

    kind = "qda"

    def __init__(self, reg: float = 1e-6):
        self.reg = reg
        self.means_ = None
        self.covariances_ = None
        self.priors_ = None
        self.log_dets_ = None
        self.lambdas_ = None
        self._chols = None

    @property
    def class_count(self) -> int:
        return 0 if self.means_ is None else self.means_.shape[0]

    def fit(self, X, y, class_count: int | None = None) -> "QdaClassifier":
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.int64)
        if X.ndim != 2 or X.shape[0] != y.shape[0]:
            raise ValueError("X must be (n, d) with one label per row")
        n, d = X.shape
        c = int(class_count) if class_count is not None else int(y.max()) + 1
        means = np.empty((c, d))
        covs = np.empty((c, d, d))
        chols = np.empty((c, d, d))
        log_dets = np.empty(c)
        lams = np.empty(c)
        counts = np.bincount(y, minlength=c)
        for i in range(c):
            if counts[i] < 2:
                raise ValueError(f"class {i} has {counts[i]} samples; need at least 2")
            Xi = X[y == i]
            means[i] = Xi.mean(axis=0)
            centered = Xi - means[i]
            cov = centered.T @ centered / Xi.shape[0]
            covs[i], chols[i], lams[i] = _regularize(cov, self.reg)
            log_dets[i] = 2.0 * np.sum(np.log(np.diag(chols[i])))
        self.means_ = means
        self.covariances_ = covs
        self.priors_ = counts / n
        self.log_dets_ = log_dets
        self.lambdas_ = lams
        self._chols = chols
        return self

    def _rebuild_chols(self) -> None:
        # Recompute Cholesky factors from stored covariances (after load).
        c, d = self.means_.shape
        self._chols = np.empty((c, d, d))
        for i in range(c):
            self._chols[i] = np.linalg.cholesky(self.covariances_[i])

    def discriminants(self, X) -> np.ndarray:
        """Matrix of g_i(x): one row per input, one column per class."""
        if self.means_ is None:
            raise RuntimeError("classifier used before fit")
        if self._chols is None:
            self._rebuild_chols()
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        if X.shape[1] != self.means_.shape[1]:
            raise ValueError(f"expected {self.means_.shape[1]} features, got {X.shape[1]}")
        n, c = X.shape[0], self.class_count
        g = np.empty((n, c))
        for i in range(c):
            centered = (X - self.means_[i]).T
            w = np.linalg.solve(self._chols[i], centered)
            maha = (w ** 2).sum(axis=0)
            g[:, i] = -0.5 * maha - 0.5 * self.log_dets_[i] + np.log(self.priors_[i])
        return g

    def scores(self, X) -> np.ndarray:
        return self.discriminants(X)

    def predict(self, X) -> np.ndarray:
        # argmax takes the first maximum, i.e. the smallest class id on ties.
        return np.argmax(self.discriminants(X), axis=1)
