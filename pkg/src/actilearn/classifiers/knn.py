"""k-nearest-neighbor classifier with internal feature standardization."""

from __future__ import annotations

import numpy as np

from ..features import Standardizer


class KnnClassifier:
    """Majority vote among the k nearest training points (Euclidean,
    standardized space).

    Tie rules are fully deterministic: equal distances order by training
    index, and a vote tie goes to the label of the nearest neighbor that
    belongs to one of the tied classes.
    """

    kind = "knn"

    def __init__(self, k: int = 5):
        self.k = int(k)
        self.scaler = None
        self.train_ = None
        self.labels_ = None
        self.class_count = 0

    def fit(self, X, y, class_count: int | None = None) -> "KnnClassifier":
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.int64)
        if not 1 <= self.k <= X.shape[0]:
            raise ValueError(f"k={self.k} must lie in 1..{X.shape[0]} (training size)")
        self.scaler = Standardizer().fit(X)
        self.train_ = self.scaler.transform(X)
        self.labels_ = y.copy()
        self.class_count = int(class_count) if class_count is not None else int(y.max()) + 1
        return self

    def _neighbors(self, X) -> np.ndarray:
        """Indices of the k nearest training points per query, nearest first."""
        if self.train_ is None:
            raise RuntimeError("classifier used before fit")
        Xq = np.atleast_2d(np.asarray(X, dtype=np.float64))
        if Xq.shape[1] != self.train_.shape[1]:
            raise ValueError(f"expected {self.train_.shape[1]} features, got {Xq.shape[1]}")
        Xq = self.scaler.transform(Xq)
        d2 = ((Xq[:, None, :] - self.train_[None, :, :]) ** 2).sum(axis=2)
        # Stable sort keeps the smaller training index first on distance ties.
        order = np.argsort(d2, axis=1, kind="stable")
        return order[:, :self.k]

    def vote_proportions(self, X) -> np.ndarray:
        """Fraction of the k neighbors voting for each class."""
        nbrs = self._neighbors(X)
        votes = self.labels_[nbrs]
        props = np.zeros((nbrs.shape[0], self.class_count))
        for c in range(self.class_count):
            props[:, c] = (votes == c).sum(axis=1)
        return props / self.k

    def scores(self, X) -> np.ndarray:
        return self.vote_proportions(X)

    def predict(self, X) -> np.ndarray:
        nbrs = self._neighbors(X)
        votes = self.labels_[nbrs]
        out = np.empty(nbrs.shape[0], dtype=np.int64)
        for row in range(nbrs.shape[0]):
            counts = np.bincount(votes[row], minlength=self.class_count)
            top = counts.max()
            tied = np.flatnonzero(counts == top)
            if tied.size == 1:
                out[row] = tied[0]
            else:
                # Nearest neighbor whose label is among the tied classes.
                for lbl in votes[row]:
                    if counts[lbl] == top:
                        out[row] = lbl
                        break
        return out
