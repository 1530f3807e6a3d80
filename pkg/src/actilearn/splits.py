"""Seeded stratified splitting helpers shared by the harness, the feature
selection wrapper, and the active-learning loop."""

from __future__ import annotations

import numpy as np


def stratified_split_indices(y, first_fraction: float,
                             rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """Split sample indices per class: round(fraction * class size) into the
    first part, the rest into the second. Both parts are returned in
    ascending index order. Raises if any class ends up empty on either side.
    """
    if not 0 < first_fraction < 1:
        raise ValueError(f"fraction must lie in (0, 1), got {first_fraction}")
    y = np.asarray(y, dtype=np.int64)
    first: list[np.ndarray] = []
    second: list[np.ndarray] = []
    for cls in np.unique(y):
        idx = np.flatnonzero(y == cls)
        take = round(first_fraction * idx.size)
        if take == 0 or take == idx.size:
            raise ValueError(
                f"class {cls} ({idx.size} samples) would be emptied by fraction {first_fraction}")
        perm = rng.permutation(idx.size)
        first.append(idx[perm[:take]])
        second.append(idx[perm[take:]])
    return np.sort(np.concatenate(first)), np.sort(np.concatenate(second))


def stratified_fold_assignment(y, folds: int, rng: np.random.Generator) -> np.ndarray:
    """Assign each sample a fold id in 0..folds-1, dealing shuffled class
    members round-robin so folds stay class-balanced."""
    if folds < 2:
        raise ValueError(f"fold count must be >= 2, got {folds}")
    y = np.asarray(y, dtype=np.int64)
    assignment = np.empty(y.size, dtype=np.int64)
    for cls in np.unique(y):
        idx = np.flatnonzero(y == cls)
        shuffled = idx[rng.permutation(idx.size)]
        assignment[shuffled] = np.arange(idx.size) % folds
    return assignment
