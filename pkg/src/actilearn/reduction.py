"""Dimensionality reduction: discriminant projection and greedy wrapper
feature selection."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .splits import stratified_fold_assignment


@dataclass
class LdaProjection:
    """Linear discriminant projection onto at most C-1 directions.

    Columns of ``matrix`` have unit Euclidean norm and a sign convention
    (largest-magnitude entry positive); ``eigenvalues`` are the matching
    generalized Rayleigh quotients, descending.
    """

    mean: np.ndarray        # (d,)
    matrix: np.ndarray      # (d, m)
    eigenvalues: np.ndarray  # (m,), descending

    @property
    def components(self) -> int:
        return int(self.matrix.shape[1])


def scatter_matrices(X, y) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Between-class and within-class scatter, plus the global mean."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    d = X.shape[1]
    mean = X.mean(axis=0)
    s_w = np.zeros((d, d))
    s_b = np.zeros((d, d))
    for cls in np.unique(y):
        Xc = X[y == cls]
        mu = Xc.mean(axis=0)
        centered = Xc - mu
        s_w += centered.T @ centered
        diff = (mu - mean)[:, None]
        s_b += Xc.shape[0] * (diff @ diff.T)
    return s_b, s_w, mean


def fit_lda(X, y, m: int | None = None, reg: float = 1e-6) -> LdaProjection:
    """Solve S_b v = lambda S_w v for the top discriminant directions.

    S_w is ridge-regularized (lambda = reg * trace / d, grown tenfold until
    its Cholesky factorization succeeds), the problem is reduced to a
    symmetric eigenproblem through that factor, and the top-m eigenpairs are
    returned. ``m`` defaults to min(C-1, d) and may not exceed it.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    classes, counts = np.unique(y, return_counts=True)
    if (counts < 2).any():
        small = classes[counts < 2][0]
        raise ValueError(f"class {small} has fewer than 2 samples")
    d = X.shape[1]
    max_m = min(classes.size - 1, d)
    if m is None:
        m = max_m
    if not 1 <= m <= max_m:
        raise ValueError(f"component count {m} must lie in 1..{max_m} "
                         f"(min(C-1, d) for C={classes.size}, d={d})")
    s_b, s_w, mean = scatter_matrices(X, y)
    lam = reg * np.trace(s_w) / d
    if lam <= 0:
        lam = 1e-12
    while True:
        try:
            chol = np.linalg.cholesky(s_w + lam * np.eye(d))
            break
        except np.linalg.LinAlgError:
            lam *= 10
    # Symmetric reduction: M = L^-1 S_b L^-T shares eigenvalues with the
    # generalized problem; eigenvectors map back through L^-T.
    half = np.linalg.solve(chol, s_b)
    sym = np.linalg.solve(chol, half.T).T
    sym = (sym + sym.T) / 2.0
    eigvals, eigvecs = np.linalg.eigh(sym)
    order = np.argsort(eigvals)[::-1][:m]
    eigvals = np.maximum(eigvals[order], 0.0)
    vecs = np.linalg.solve(chol.T, eigvecs[:, order])
    for col in range(vecs.shape[1]):
        pivot = np.argmax(np.abs(vecs[:, col]))
        if vecs[pivot, col] < 0:
            vecs[:, col] = -vecs[:, col]
        vecs[:, col] /= np.linalg.norm(vecs[:, col])
    return LdaProjection(mean, vecs, eigvals)


def project(proj: LdaProjection, X) -> np.ndarray:
    """Center by the training mean and project onto the discriminant axes."""
    X = np.asarray(X, dtype=np.float64)
    single = X.ndim == 1
    X2 = np.atleast_2d(X)
    if X2.shape[1] != proj.mean.size:
        raise ValueError(f"expected {proj.mean.size} features, got {X2.shape[1]}")
    out = (X2 - proj.mean) @ proj.matrix
    return out[0] if single else out


@dataclass
class FeatureSubset:
    """Greedily selected feature indices with the score achieved at each step."""

    indices: list[int] = field(default_factory=list)
    scores: list[float] = field(default_factory=list)


def cross_val_score(X, y, classifier_factory: Callable[[], object],
                    fold_ids: np.ndarray, class_count: int) -> float:
    """Mean classification rate over the given fold assignment.

    A classifier that fails to fit inside a fold contributes 0 for that fold
    (some subsets starve a class below its minimum sample count).
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    rates = []
    for fold in range(int(fold_ids.max()) + 1):
        test = fold_ids == fold
        train = ~test
        try:
            clf = classifier_factory()
            clf.fit(X[train], y[train], class_count)
            rates.append(float(np.mean(clf.predict(X[test]) == y[test])))
        except (ValueError, np.linalg.LinAlgError, FloatingPointError):
            rates.append(0.0)
    return float(np.mean(rates))


def sfs_select(X, y, classifier_factory: Callable[[], object],
               target_size: int = 5, folds: int = 5, seed: int = 0,
               class_count: int | None = None) -> FeatureSubset:
    """Sequential forward selection wrapped around a classifier.

    Each step adds the feature whose inclusion maximizes the stratified
    cross-validated classification rate; score ties go to the smallest
    feature index. Fold assignment is drawn once from ``seed``, so re-running
    cross-validation on any selected prefix reproduces its recorded score.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    d = X.shape[1]
    if not 1 <= target_size <= d:
        raise ValueError(f"target size {target_size} must lie in 1..{d}")
    c = int(class_count) if class_count is not None else int(y.max()) + 1
    rng = np.random.default_rng(seed)
    fold_ids = stratified_fold_assignment(y, folds, rng)
    subset = FeatureSubset()
    remaining = list(range(d))
    while len(subset.indices) < target_size:
        best_score = -1.0
        best_feature = -1
        for feature in remaining:
            cols = subset.indices + [feature]
            score = cross_val_score(X[:, cols], y, classifier_factory, fold_ids, c)
            if score > best_score:
                best_score = score
                best_feature = feature
        subset.indices.append(best_feature)
        subset.scores.append(best_score)
        remaining.remove(best_feature)
    return subset
