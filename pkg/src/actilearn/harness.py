"""Dataset assembly, train/test evaluation, and the passive experiment grid
(classifier x feature space)."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .activities import ACTIVITY_NAMES
from .classifiers import CLASSIFIER_KINDS, make_classifier
from .features import FEATURE_NAMES, feature_matrix
from .reduction import FeatureSubset, fit_lda, project, sfs_select
from .signals import (DEFAULT_CUTOFF_HZ, DEFAULT_GAP_THRESHOLD_S, DEFAULT_RATE_HZ,
                      WINDOW_SIZE, lowpass_filter, make_windows, resample_uniform)
from .splits import stratified_split_indices

SPACES = ("original", "lda", "sfs")


@dataclass
class Dataset:
    """Feature matrix plus labels and naming metadata."""

    X: np.ndarray
    y: np.ndarray
    class_names: tuple[str, ...] = ACTIVITY_NAMES
    feature_names: tuple[str, ...] = FEATURE_NAMES
    provenance: str = ""

    def __post_init__(self):
        self.X = np.asarray(self.X, dtype=np.float64)
        self.y = np.asarray(self.y, dtype=np.int64)
        if self.X.ndim != 2 or self.X.shape[0] != self.y.shape[0]:
            raise ValueError("X must be (n, d) with one label per row")
        if not np.isfinite(self.X).all():
            raise ValueError("feature matrix contains non-finite values")

    @property
    def class_count(self) -> int:
        return len(self.class_names)

    def subset(self, idx: np.ndarray) -> "Dataset":
        return Dataset(self.X[idx], self.y[idx], self.class_names,
                       self.feature_names, self.provenance)


def dataset_from_streams(streams, rate: float = DEFAULT_RATE_HZ,
                         cutoff: float = DEFAULT_CUTOFF_HZ,
                         gap_threshold: float = DEFAULT_GAP_THRESHOLD_S,
                         window_size: int = WINDOW_SIZE,
                         overlap_fraction: float = 0.0,
                         provenance: str = "") -> Dataset:
    """Run raw streams through the full preprocessing chain into features.

    Windows without a known label are dropped here; the feature pipeline is
    resample -> low-pass -> window -> 31 features per window.
    """
    windows = []
    for stream_id, stream in enumerate(streams):
        for series in resample_uniform(stream, rate, gap_threshold):
            filtered = lowpass_filter(series, cutoff)
            windows.extend(make_windows(filtered, window_size, overlap_fraction, stream_id))
    windows = [w for w in windows if w.label >= 0]
    X, y = feature_matrix(windows, rate)
    return Dataset(X, y, provenance=provenance)


def split_dataset(data: Dataset, train_fraction: float = 0.75,
                  seed: int = 0) -> tuple[Dataset, Dataset]:
    """Stratified seeded split; per-class train count is round(fraction * size)."""
    rng = np.random.default_rng(seed)
    train_idx, test_idx = stratified_split_indices(data.y, train_fraction, rng)
    return data.subset(train_idx), data.subset(test_idx)


@dataclass
class EvalReport:
    """Confusion matrix, classification rate, per-class recall, and the
    configuration that produced them."""

    confusion: np.ndarray  # (C, C); rows = true class, columns = predicted
    rate: float
    per_class_recall: np.ndarray
    config: dict = field(default_factory=dict)


def evaluate(model, test: Dataset, config: dict | None = None) -> EvalReport:
    """Score a fitted model on a test set."""
    pred = model.predict(test.X)
    c = test.class_count
    confusion = np.zeros((c, c), dtype=np.int64)
    np.add.at(confusion, (test.y, pred), 1)
    rate = float(np.trace(confusion) / confusion.sum())
    row_sums = confusion.sum(axis=1)
    recall = np.where(row_sums > 0, np.diag(confusion) / np.maximum(row_sums, 1), 0.0)
    return EvalReport(confusion, rate, recall, dict(config or {}))


@dataclass
class PassiveConfig:
    """Configuration of the passive grid: which classifiers, which spaces,
    and every hyperparameter with its default."""

    classifiers: tuple[str, ...] = CLASSIFIER_KINDS
    spaces: tuple[str, ...] = SPACES
    train_fraction: float = 0.75
    seed: int = 0
    lda_components: int | None = None   # None = min(C-1, d)
    sfs_target_size: int = 5
    sfs_folds: int = 5
    hyper: dict = field(default_factory=dict)  # per-kind keyword overrides


@dataclass
class PassiveResult:
    reports: dict = field(default_factory=dict)   # (classifier, space) -> EvalReport
    failures: dict = field(default_factory=dict)  # (classifier, space) -> error string
    subsets: dict = field(default_factory=dict)   # classifier -> FeatureSubset


def _transform_pair(space, train, test, lda_proj, subset):
    if space == "original":
        return train.X, test.X
    if space == "lda":
        return project(lda_proj, train.X), project(lda_proj, test.X)
    if space == "sfs":
        return train.X[:, subset.indices], test.X[:, subset.indices]
    raise ValueError(f"unknown feature space {space!r}; expected one of {SPACES}")


def run_passive_experiment(data: Dataset, config: PassiveConfig) -> PassiveResult:
    """Fit and evaluate every (classifier, space) cell.

    Reductions and standardization are fitted on the training split only;
    cells are isolated, so one failing cell is reported without aborting the
    rest.
    """
    train, test = split_dataset(data, config.train_fraction, config.seed)
    result = PassiveResult()
    lda_proj = None
    if "lda" in config.spaces:
        lda_proj = fit_lda(train.X, train.y, config.lda_components)
    for kind in config.classifiers:
        hyper = dict(config.hyper.get(kind, {}))
        subset: FeatureSubset | None = None
        if "sfs" in config.spaces:
            factory = lambda kind=kind, hyper=hyper: make_classifier(kind, **hyper)
            subset = sfs_select(train.X, train.y, factory,
                                target_size=config.sfs_target_size,
                                folds=config.sfs_folds, seed=config.seed,
                                class_count=data.class_count)
            result.subsets[kind] = subset
        for space in config.spaces:
            cell_config = {
                "classifier": kind, "space": space, "seed": config.seed,
                "train_fraction": config.train_fraction,
                "lda_components": None if lda_proj is None else lda_proj.components,
                "sfs_target_size": config.sfs_target_size,
                "sfs_folds": config.sfs_folds,
                **{f"hyper_{k}": v for k, v in hyper.items()},
            }
            if space == "sfs" and subset is not None:
                cell_config["sfs_indices"] = ",".join(str(i) for i in subset.indices)
            try:
                X_train, X_test = _transform_pair(space, train, test, lda_proj, subset)
                model = make_classifier(kind, **hyper)
                model.fit(X_train, train.y, data.class_count)
                test_view = Dataset(X_test, test.y, test.class_names,
                                    tuple(f"f{i}" for i in range(X_test.shape[1])),
                                    test.provenance)
                result.reports[(kind, space)] = evaluate(model, test_view, cell_config)
            except (ValueError, np.linalg.LinAlgError, FloatingPointError) as exc:
                result.failures[(kind, space)] = f"{type(exc).__name__}: {exc}"
    return result


def summary_rows(result: PassiveResult) -> list[tuple[str, str, str]]:
    """(classifier, space, rate-or-error) rows for the summary table."""
    rows = []
    seen = list(result.reports.keys()) + list(result.failures.keys())
    for kind, space in sorted(seen):
        if (kind, space) in result.reports:
            rows.append((kind, space, repr(result.reports[(kind, space)].rate)))
        else:
            rows.append((kind, space, "failed: " + result.failures[(kind, space)]))
    return rows
