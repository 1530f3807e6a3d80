"""Pool-based active learning: per-classifier uncertainty measures, mixed
random/uncertainty query selection, and learning-curve generation against a
replayed label oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .classifiers import StandardizedClassifier
from .splits import stratified_split_indices

# Discriminant and decision-value gaps below this are clamped before
# inversion, capping the uncertainty at its reciprocal instead of
# overflowing on boundary samples.
GAP_CLAMP = 1e-12


@dataclass
class QueryStrategy:
    """How queries are chosen: pure random, or max-uncertainty with an
    epsilon chance of a uniform random query (default 0.10)."""

    kind: str = "uncertainty"
    epsilon: float = 0.10

    def __post_init__(self):
        if self.kind not in ("uncertainty", "random"):
            raise ValueError(f"strategy kind must be 'uncertainty' or 'random', got {self.kind!r}")
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError(f"epsilon must lie in [0, 1], got {self.epsilon}")


@dataclass
class PoolState:
    """Index bookkeeping for one active-learning run.

    ``labeled``, ``pool`` and ``test`` are disjoint index sets into the
    backing (X, y); pool labels exist but are only revealed when queried.
    """

    X: np.ndarray
    y: np.ndarray
    labeled: np.ndarray
    pool: np.ndarray
    test: np.ndarray

    def __post_init__(self):
        sets = [set(map(int, s)) for s in (self.labeled, self.pool, self.test)]
        total = sum(len(s) for s in sets)
        if len(sets[0] | sets[1] | sets[2]) != total:
            raise ValueError("labeled, pool and test index sets must be disjoint")

    def reveal(self, index: int) -> None:
        """Move one queried pool sample (with its true label) to the labeled set."""
        if index not in self.pool:
            raise ValueError(f"index {index} is not in the pool")
        self.pool = self.pool[self.pool != index]
        self.labeled = np.sort(np.append(self.labeled, index))


@dataclass
class LearningCurve:
    """Per-run test accuracy indexed by query count (column 0 = no queries)."""

    rounds: int
    accuracies: np.ndarray  # (runs, rounds + 1)
    warnings: list[str] = field(default_factory=list)

    @property
    def mean_curve(self) -> np.ndarray:
        return self.accuracies.mean(axis=0)

    @property
    def std_curve(self) -> np.ndarray:
        return self.accuracies.std(axis=0)


def _clamped_inverse(gaps: np.ndarray) -> np.ndarray:
    return 1.0 / np.maximum(gaps, GAP_CLAMP)


def min_pairwise_gap_uncertainty(discriminants: np.ndarray) -> np.ndarray:
    """Max over class pairs of 1/|g_i - g_j|: large when any two classes
    score nearly the same."""
    g = np.atleast_2d(discriminants)
    c = g.shape[1]
    min_gap = np.full(g.shape[0], np.inf)
    for i in range(c):
        for j in range(i + 1, c):
            min_gap = np.minimum(min_gap, np.abs(g[:, i] - g[:, j]))
    return _clamped_inverse(min_gap)


def entropy_uncertainty(proportions: np.ndarray) -> np.ndarray:
    """Shannon entropy (natural log) of a probability vector per row."""
    p = np.atleast_2d(proportions)
    terms = np.where(p > 0, p * np.log(np.where(p > 0, p, 1.0)), 0.0)
    return -terms.sum(axis=1)


def boundary_proximity_uncertainty(decision_values: np.ndarray) -> np.ndarray:
    """1 / min_c |f_c|: large when the sample sits near any one-vs-all
    boundary."""
    f = np.atleast_2d(decision_values)
    return _clamped_inverse(np.abs(f).min(axis=1))


def uncertainty_scores(model, X) -> np.ndarray:
    """Dispatch to the model's uncertainty measure; one value per row of X."""
    if isinstance(model, StandardizedClassifier):
        return uncertainty_scores(model.base, model._prep(X))
    if model.kind == "qda":
        return min_pairwise_gap_uncertainty(model.discriminants(X))
    if model.kind == "knn":
        return entropy_uncertainty(model.vote_proportions(X))
    if model.kind == "svm":
        return boundary_proximity_uncertainty(model.scores(X))
    if model.kind == "mlp":
        return entropy_uncertainty(model.posteriors(X))
    raise ValueError(f"no uncertainty measure for classifier kind {model.kind!r}")


def uncertainty_qda(model, x) -> float:
    return float(uncertainty_scores(model, np.atleast_2d(x))[0])


def uncertainty_knn(model, x) -> float:
    return float(uncertainty_scores(model, np.atleast_2d(x))[0])


def uncertainty_svm(model, x) -> float:
    return float(uncertainty_scores(model, np.atleast_2d(x))[0])


def uncertainty_ann(model, x) -> float:
    return float(uncertainty_scores(model, np.atleast_2d(x))[0])


def select_query(state: PoolState, model, strategy: QueryStrategy,
                 rng: np.random.Generator) -> int:
    """Pick the next pool index to query.

    One uniform draw decides random-vs-uncertainty first (always, so rng
    streams stay aligned across strategies); a random query then consumes one
    integer draw. Uncertainty ties resolve to the smallest pool index.
    """
    if state.pool.size == 0:
        raise ValueError("pool is empty; nothing to query")
    mix = rng.random()
    if strategy.kind == "random" or mix < strategy.epsilon:
        return int(state.pool[rng.integers(state.pool.size)])
    scores = uncertainty_scores(model, state.X[state.pool])
    return int(state.pool[int(np.argmax(scores))])


def run_active_learning(X, y, classifier_factory: Callable[[], object],
                        strategy: QueryStrategy, rounds: int = 300,
                        seeds_per_class: int = 4, runs: int = 50,
                        test_fraction: float = 0.25,
                        master_seed: int = 0) -> LearningCurve:
    """Simulate the query loop and return per-run learning curves.

    Per run: a stratified test split, ``seeds_per_class`` random labeled
    samples per class, then ``rounds`` iterations of fit / record test
    accuracy / query one sample / reveal its label, plus one final fit and
    record. The master seed fans out one seed pair per run (splits+seeding
    stream, query stream), so runs are independent and the whole curve is
    reproducible bit for bit.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    classes = np.unique(y)
    class_count = int(y.max()) + 1
    warnings: list[str] = []
    run_seeds = np.random.SeedSequence(master_seed).spawn(runs)
    accuracies = None
    for run in range(runs):
        split_stream, query_stream = run_seeds[run].spawn(2)
        split_rng = np.random.default_rng(split_stream)
        query_rng = np.random.default_rng(query_stream)
        trainable, test_idx = stratified_split_indices(y, 1.0 - test_fraction, split_rng)
        labeled_parts = []
        for cls in classes:
            members = trainable[y[trainable] == cls]
            if members.size < seeds_per_class:
                raise ValueError(f"class {cls} has only {members.size} non-test samples; "
                                 f"cannot seed {seeds_per_class} per class")
            pick = split_rng.permutation(members.size)[:seeds_per_class]
            labeled_parts.append(members[pick])
        labeled = np.sort(np.concatenate(labeled_parts))
        pool = np.setdiff1d(trainable, labeled)
        state = PoolState(X, y, labeled, pool, test_idx)
        effective_rounds = rounds
        if rounds > pool.size:
            effective_rounds = int(pool.size)
            message = (f"run {run}: requested {rounds} rounds but the pool has "
                       f"{pool.size} samples; truncated")
            warnings.append(message)
        if accuracies is None:
            accuracies = np.zeros((runs, effective_rounds + 1))
        model = None
        for rnd in range(effective_rounds):
            model = classifier_factory()
            model.fit(X[state.labeled], y[state.labeled], class_count)
            accuracies[run, rnd] = np.mean(model.predict(X[state.test]) == y[state.test])
            state.reveal(select_query(state, model, strategy, query_rng))
        model = classifier_factory()
        model.fit(X[state.labeled], y[state.labeled], class_count)
        accuracies[run, effective_rounds] = np.mean(
            model.predict(X[state.test]) == y[state.test])
    return LearningCurve(accuracies.shape[1] - 1, accuracies, warnings)
