import numpy as np
import pytest

from actilearn.classifiers import make_classifier
from actilearn.reduction import (cross_val_score, fit_lda, project,
                                 scatter_matrices, sfs_select)
from actilearn.splits import stratified_fold_assignment


def labeled_gaussians(rng, n_per_class=30, classes=5, d=8, spread=4.0):
    centers = rng.normal(0.0, spread, size=(classes, d))
    X = np.vstack([rng.normal(c, 1.0, size=(n_per_class, d)) for c in centers])
    y = np.repeat(np.arange(classes), n_per_class)
    return X, y


class TestLda:
    def test_component_count_capped_at_classes_minus_one(self):
        rng = np.random.default_rng(0)
        X, y = labeled_gaussians(rng)
        proj = fit_lda(X, y)
        assert proj.components == 4
        with pytest.raises(ValueError, match="component count"):
            fit_lda(X, y, 5)

    def test_single_informative_feature(self):
        # Only feature 0 differs between classes; the first axis must be e0.
        X = np.zeros((20, 2))
        X[10:, 0] = 5.0
        X[:, 1] = 3.0
        y = np.repeat([0, 1], 10)
        proj = fit_lda(X, y, 1)
        np.testing.assert_allclose(np.abs(proj.matrix.ravel()), [1.0, 0.0], atol=1e-9)
        assert proj.matrix[0, 0] > 0  # sign convention

    def test_separated_classes_stay_ordered_along_first_axis(self):
        rng = np.random.default_rng(1)
        X = np.vstack([rng.normal(0.0, 0.5, size=(40, 3)),
                       rng.normal(8.0, 0.5, size=(40, 3))])
        y = np.repeat([0, 1], 40)
        proj = fit_lda(X, y, 1)
        z = project(proj, X)[:, 0]
        assert z[:40].max() < z[40:].min() or z[:40].min() > z[40:].max()

    def test_eigen_residuals_small(self):
        rng = np.random.default_rng(2)
        for trial in range(10):
            X, y = labeled_gaussians(rng, classes=4, d=6)
            proj = fit_lda(X, y)
            s_b, s_w, _ = scatter_matrices(X, y)
            lam_ridge = 1e-6 * np.trace(s_w) / 6
            s_w_reg = s_w + lam_ridge * np.eye(6)
            for col in range(proj.components):
                v = proj.matrix[:, col]
                lam = proj.eigenvalues[col]
                residual = np.linalg.norm(s_b @ v - lam * (s_w_reg @ v))
                assert residual <= 1e-6 * np.linalg.norm(s_b @ v)

    def test_rayleigh_quotient_equals_eigenvalue(self):
        rng = np.random.default_rng(3)
        X, y = labeled_gaussians(rng, classes=3, d=5)
        proj = fit_lda(X, y, 1)
        s_b, s_w, _ = scatter_matrices(X, y)
        s_w += 1e-6 * np.trace(s_w) / 5 * np.eye(5)
        v = proj.matrix[:, 0]
        quotient = (v @ s_b @ v) / (v @ s_w @ v)
        assert abs(quotient - proj.eigenvalues[0]) <= 1e-6 * proj.eigenvalues[0]

    def test_eigenvalues_descending_nonnegative(self):
        rng = np.random.default_rng(4)
        X, y = labeled_gaussians(rng)
        proj = fit_lda(X, y)
        assert (proj.eigenvalues >= 0).all()
        assert (np.diff(proj.eigenvalues) <= 1e-9).all()

    def test_unit_norm_columns(self):
        rng = np.random.default_rng(5)
        X, y = labeled_gaussians(rng)
        proj = fit_lda(X, y)
        np.testing.assert_allclose(np.linalg.norm(proj.matrix, axis=0), 1.0, atol=1e-12)

    def test_rejects_tiny_class(self):
        X = np.random.default_rng(6).normal(size=(5, 2))
        y = np.array([0, 0, 0, 0, 1])
        with pytest.raises(ValueError, match="class 1"):
            fit_lda(X, y)


class TestProject:
    def test_global_mean_maps_to_zero(self):
        rng = np.random.default_rng(7)
        X, y = labeled_gaussians(rng)
        proj = fit_lda(X, y)
        np.testing.assert_allclose(project(proj, X.mean(axis=0)), 0.0, atol=1e-9)

    def test_affine_combination(self):
        rng = np.random.default_rng(8)
        X, y = labeled_gaussians(rng)
        proj = fit_lda(X, y)
        x1, x2 = rng.normal(size=(2, X.shape[1]))
        a = 0.3
        lhs = project(proj, a * x1 + (1 - a) * x2)
        rhs = a * project(proj, x1) + (1 - a) * project(proj, x2)
        np.testing.assert_allclose(lhs, rhs, atol=1e-9)

    def test_scalar_recovery_in_1d(self):
        X = np.array([[0.0], [1.0], [4.0], [5.0]])
        y = np.array([0, 0, 1, 1])
        proj = fit_lda(X, y, 1)
        z = project(proj, X)[:, 0]
        np.testing.assert_allclose(z, (X[:, 0] - X.mean()) * proj.matrix[0, 0])

    def test_rejects_dimension_mismatch(self):
        rng = np.random.default_rng(9)
        X, y = labeled_gaussians(rng)
        proj = fit_lda(X, y)
        with pytest.raises(ValueError, match="features"):
            project(proj, np.zeros(3))


def informative_feature_dataset(rng, n=60, noise_features=9):
    y = np.arange(n) % 2
    X = rng.normal(size=(n, 1 + noise_features))
    X[:, 0] = y * 5.0 + rng.normal(0.0, 0.01, size=n)
    return X, y


class TestSfs:
    def test_informative_feature_selected_first(self):
        rng = np.random.default_rng(10)
        X, y = informative_feature_dataset(rng)
        subset = sfs_select(X, y, lambda: make_classifier("knn", k=3),
                            target_size=3, folds=5, seed=0)
        assert subset.indices[0] == 0

    def test_subset_size_and_uniqueness(self):
        rng = np.random.default_rng(11)
        X, y = labeled_gaussians(rng, classes=3, d=7)
        subset = sfs_select(X, y, lambda: make_classifier("knn", k=3),
                            target_size=5, folds=4, seed=1)
        assert len(subset.indices) == 5
        assert len(set(subset.indices)) == 5
        assert all(0 <= i < 7 for i in subset.indices)

    def test_scores_are_rates(self):
        rng = np.random.default_rng(12)
        X, y = labeled_gaussians(rng, classes=3, d=6)
        subset = sfs_select(X, y, lambda: make_classifier("qda"),
                            target_size=4, folds=4, seed=2)
        assert len(subset.scores) == 4
        assert all(0.0 <= s <= 1.0 for s in subset.scores)

    def test_prefix_scores_reproducible(self):
        rng = np.random.default_rng(13)
        X, y = labeled_gaussians(rng, classes=3, d=6)
        seed = 7
        factory = lambda: make_classifier("knn", k=3)
        subset = sfs_select(X, y, factory, target_size=3, folds=5, seed=seed)
        fold_ids = stratified_fold_assignment(y, 5, np.random.default_rng(seed))
        for step in range(3):
            cols = subset.indices[:step + 1]
            score = cross_val_score(X[:, cols], y, factory, fold_ids, 3)
            assert abs(score - subset.scores[step]) <= 1e-12

    def test_fit_failure_counts_as_zero(self):
        # One sample per class in some folds makes the quadratic model
        # unfittable; the candidate still gets scored, just with zeros.
        X = np.array([[0.0], [1.0], [2.0], [3.0]])
        y = np.array([0, 1, 0, 1])
        fold_ids = np.array([0, 0, 1, 1])
        score = cross_val_score(X, y, lambda: make_classifier("qda"), fold_ids, 2)
        assert score == 0.0

    def test_rejects_bad_target_size(self):
        rng = np.random.default_rng(14)
        X, y = labeled_gaussians(rng, classes=3, d=4)
        with pytest.raises(ValueError, match="target size"):
            sfs_select(X, y, lambda: make_classifier("knn", k=3), target_size=5)
