"""The four classifiers behind one fit/predict/scores contract.

``scores`` returns one value per class; its meaning is classifier-specific
(QDA discriminants, kNN vote proportions, SVM decision values, MLP
posteriors) and the uncertainty measures in :mod:`actilearn.active` are
defined per kind accordingly.
"""

from __future__ import annotations

import numpy as np

from ..features import Standardizer
from .qda import QdaClassifier
from .knn import KnnClassifier
from .svm import SvmBinaryClassifier, SvmOvaClassifier, rbf_kernel, median_pairwise_distance
from .mlp import MlpClassifier

__all__ = [
    "QdaClassifier", "KnnClassifier", "SvmBinaryClassifier", "SvmOvaClassifier",
    "MlpClassifier", "StandardizedClassifier", "make_classifier", "rbf_kernel",
    "median_pairwise_distance", "CLASSIFIER_KINDS",
]

CLASSIFIER_KINDS = ("qda", "knn", "svm", "mlp")


class StandardizedClassifier:
    """Z-scores features with training statistics, then delegates to a base
    classifier. Keeps scale-sensitive models honest without leaking test
    statistics."""

    def __init__(self, base):
        self.base = base
        self.scaler = None

    @property
    def kind(self) -> str:
        return self.base.kind

    @property
    def class_count(self) -> int:
        return self.base.class_count

    def fit(self, X, y, class_count: int | None = None) -> "StandardizedClassifier":
        self.scaler = Standardizer().fit(X)
        self.base.fit(self.scaler.transform(X), y, class_count)
        return self

    def _prep(self, X) -> np.ndarray:
        if self.scaler is None:
            raise RuntimeError("classifier used before fit")
        return self.scaler.transform(np.atleast_2d(np.asarray(X, dtype=np.float64)))

    def predict(self, X) -> np.ndarray:
        return self.base.predict(self._prep(X))

    def scores(self, X) -> np.ndarray:
        return self.base.scores(self._prep(X))


def make_classifier(kind: str, **hyper):
    """Build a fresh classifier by kind name.

    All kinds except kNN are wrapped in a :class:`StandardizedClassifier`
    (kNN standardizes internally already). Unknown hyperparameters raise.
    """
    if kind == "qda":
        return StandardizedClassifier(QdaClassifier(**hyper))
    if kind == "knn":
        return KnnClassifier(**hyper)
    if kind == "svm":
        return StandardizedClassifier(SvmOvaClassifier(**hyper))
    if kind == "mlp":
        return StandardizedClassifier(MlpClassifier(**hyper))
    raise ValueError(f"unknown classifier kind {kind!r}; expected one of {CLASSIFIER_KINDS}")
