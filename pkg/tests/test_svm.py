import numpy as np
import pytest

from actilearn.classifiers import (SvmBinaryClassifier, SvmOvaClassifier,
                                   median_pairwise_distance, rbf_kernel)

from oracles import solve_svm_dual_qp, svm_dual_objective

XOR_X = np.array([[0.0, 0.0], [0.0, 1.0], [1.0, 0.0], [1.0, 1.0]])
XOR_Y = np.array([-1.0, 1.0, 1.0, -1.0])


def fit_two_point():
    X = np.array([[-1.0], [1.0]])
    y = np.array([-1.0, 1.0])
    return SvmBinaryClassifier(sigma=1.0, c_box=10.0).fit(X, y)


class TestBinary:
    def test_two_point_analytic_solution(self):
        # By symmetry both multipliers equal 1 / (1 - K12) with
        # K12 = exp(-2) for unit points and unit kernel width.
        model = fit_two_point()
        expected = 1.0 / (1.0 - np.exp(-2.0))
        alphas = np.abs(model.coef_)
        assert alphas.shape == (2,)
        np.testing.assert_allclose(alphas, expected, atol=1e-3)
        assert abs(model.bias_) <= 1e-6
        assert model.converged_

    def test_constraint_contract(self):
        rng = np.random.default_rng(0)
        X = rng.normal(size=(60, 3))
        y = np.where(X[:, 0] + 0.3 * rng.normal(size=60) > 0, 1.0, -1.0)
        if (y > 0).all() or (y < 0).all():
            y[0] = -y[0]
        model = SvmBinaryClassifier(sigma=1.5, c_box=10.0).fit(X, y)
        assert abs(model.coef_.sum()) <= 1e-6
        assert (np.abs(model.coef_) >= 0).all()
        assert (np.abs(model.coef_) <= 10.0 + 1e-12).all()
        assert model.kkt_violation_ < 1e-3

    def test_xor_training_accuracy(self):
        model = SvmBinaryClassifier(sigma=1.0, c_box=10.0).fit(XOR_X, XOR_Y)
        pred = model.predict(XOR_X)
        assert np.array_equal(pred, XOR_Y.astype(int))

    def test_xor_matches_dense_qp_objective(self):
        model = SvmBinaryClassifier(sigma=1.0, c_box=10.0).fit(XOR_X, XOR_Y)
        K = rbf_kernel(XOR_X, XOR_X, 1.0)
        alpha_qp = solve_svm_dual_qp(K, XOR_Y, 10.0)
        # reconstruct this solver's alphas on the full training set
        alpha_smo = np.zeros(4)
        for sv, coef in zip(model.support_vectors_, model.coef_):
            idx = int(np.argmin(((XOR_X - sv) ** 2).sum(axis=1)))
            alpha_smo[idx] = abs(coef)
        obj_qp = svm_dual_objective(alpha_qp, K, XOR_Y)
        obj_smo = svm_dual_objective(alpha_smo, K, XOR_Y)
        assert abs(obj_qp - obj_smo) < 1e-3

    def test_free_support_vectors_sit_on_the_margin(self):
        rng = np.random.default_rng(1)
        X = rng.normal(size=(80, 2))
        y = np.where(X[:, 0] + X[:, 1] + 0.5 * rng.normal(size=80) > 0, 1.0, -1.0)
        model = SvmBinaryClassifier(sigma=1.0, c_box=10.0).fit(X, y)
        f = model.decision_function(model.support_vectors_)
        free = np.abs(model.coef_) < 10.0 - 1e-6
        signs = np.sign(model.coef_)  # coef sign equals the label
        margins = signs * f
        assert np.abs(margins[free] - 1.0).max() <= 2e-3

    def test_soft_margin_kkt_split(self):
        # alpha < C  ->  y f >= 1 - tol;  alpha = C  ->  y f <= 1 + tol
        rng = np.random.default_rng(2)
        X = rng.normal(size=(100, 2))
        y = np.where(X[:, 0] > 0, 1.0, -1.0)
        flip = rng.random(100) < 0.1  # some inseparable points
        y[flip] = -y[flip]
        model = SvmBinaryClassifier(sigma=1.0, c_box=5.0).fit(X, y)
        margins = y * model.decision_function(X)
        alpha_full = np.zeros(100)
        for sv, coef in zip(model.support_vectors_, model.coef_):
            idx = int(np.argmin(((X - sv) ** 2).sum(axis=1)))
            alpha_full[idx] = abs(coef)
        below_box = alpha_full < 5.0 - 1e-6
        assert (margins[below_box] >= 1.0 - 2e-3).all()
        assert (margins[~below_box] <= 1.0 + 2e-3).all()

    def test_rejects_single_class(self):
        with pytest.raises(ValueError, match="both classes"):
            SvmBinaryClassifier(sigma=1.0).fit(np.zeros((3, 1)), np.ones(3))

    def test_rejects_bad_hyperparameters(self):
        with pytest.raises(ValueError):
            SvmBinaryClassifier(sigma=0.0)
        with pytest.raises(ValueError):
            SvmBinaryClassifier(sigma=1.0, c_box=-1.0)


class TestOva:
    def test_two_class_reduction_matches_binary_sign(self):
        rng = np.random.default_rng(3)
        X = rng.normal(size=(40, 2))
        y = (X[:, 0] > 0).astype(int)
        Xq = rng.normal(size=(25, 2))
        sigma = median_pairwise_distance(X)
        ova = SvmOvaClassifier(sigma=sigma, c_box=10.0).fit(X, y, 2)
        binary = SvmBinaryClassifier(sigma=sigma, c_box=10.0).fit(
            X, np.where(y == 1, 1.0, -1.0))
        ova_pred = ova.predict(Xq)
        bin_pred = (binary.decision_function(Xq) > 0).astype(int)
        assert np.array_equal(ova_pred, bin_pred)

    def test_separated_blobs_accuracy(self, gaussian_blobs):
        X, y = gaussian_blobs
        rng = np.random.default_rng(4)
        order = rng.permutation(len(y))
        train, test = order[:120], order[120:]
        model = SvmOvaClassifier(c_box=10.0).fit(X[train], y[train], 3)
        rate = float(np.mean(model.predict(X[test]) == y[test]))
        assert rate >= 0.98

    def test_scores_one_column_per_class(self, gaussian_blobs):
        X, y = gaussian_blobs
        model = SvmOvaClassifier(c_box=10.0).fit(X, y, 3)
        assert model.scores(X[:7]).shape == (7, 3)

    def test_deterministic_refit(self):
        rng = np.random.default_rng(5)
        X = rng.normal(size=(50, 3))
        y = rng.integers(0, 3, size=50)
        Xq = rng.normal(size=(10, 3))
        a = SvmOvaClassifier().fit(X, y, 3).scores(Xq)
        b = SvmOvaClassifier().fit(X, y, 3).scores(Xq)
        assert np.array_equal(a, b)


def test_median_heuristic_positive():
    rng = np.random.default_rng(6)
    assert median_pairwise_distance(rng.normal(size=(30, 4))) > 0
    assert median_pairwise_distance(np.zeros((5, 2))) == 1.0
