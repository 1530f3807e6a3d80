"""Soft-margin RBF support vector machine trained by pairwise coordinate
ascent on the dual (SMO with maximal-violating-pair working-set selection),
plus a one-against-all multiclass wrapper."""

from __future__ import annotations

import numpy as np

DEFAULT_C_BOX = 10.0
DEFAULT_TOL = 1e-3
SUPPORT_EPS = 1e-8


def rbf_kernel(A, B, sigma: float) -> np.ndarray:
    """K(a, b) = exp(-|a - b|^2 / (2 sigma^2))."""
    A = np.atleast_2d(np.asarray(A, dtype=np.float64))
    B = np.atleast_2d(np.asarray(B, dtype=np.float64))
    d2 = ((A[:, None, :] - B[None, :, :]) ** 2).sum(axis=2)
    return np.exp(-d2 / (2.0 * sigma * sigma))


def median_pairwise_distance(X) -> float:
    """Median Euclidean distance over all training pairs (kernel-width heuristic)."""
    X = np.asarray(X, dtype=np.float64)
    n = X.shape[0]
    if n < 2:
        return 1.0
    d2 = ((X[:, None, :] - X[None, :, :]) ** 2).sum(axis=2)
    dists = np.sqrt(d2[np.triu_indices(n, k=1)])
    med = float(np.median(dists))
    return med if med > 0 else 1.0


def _smo_solve(K: np.ndarray, y: np.ndarray, c_box: float, tol: float,
               max_iter: int) -> tuple[np.ndarray, float, bool, float, int]:
    """Maximize the dual sum(a) - 0.5 a'(yy'K)a under 0 <= a <= C, sum(a y) = 0.

    Works in beta = alpha * y coordinates, where the equality constraint is
    sum(beta) = 0 and each pair step (+lam, -lam) preserves it exactly.
    Returns (beta, bias, converged, final KKT violation, iterations).
    """
    n = y.size
    beta = np.zeros(n)
    upper = np.where(y > 0, c_box, 0.0)
    lower = np.where(y > 0, 0.0, -c_box)
    # Gradient of the dual wrt beta: y - K beta.
    grad = y.astype(np.float64).copy()
    neg_inf = -np.inf
    violation = np.inf
    converged = False
    # Coordinates within float dust of a bound count as bound; keeps the
    # working-set selection from stalling on vanishing steps.
    bound_eps = 1e-12 * max(1.0, c_box)
    it = 0
    while it < max_iter:
        can_up = beta < upper - bound_eps
        can_dn = beta > lower + bound_eps
        if not can_up.any() or not can_dn.any():
            converged = True
            violation = 0.0
            break
        gi = np.where(can_up, grad, neg_inf)
        gj = np.where(can_dn, grad, np.inf)
        i = int(np.argmax(gi))
        j = int(np.argmin(gj))
        violation = grad[i] - grad[j]
        if violation <= tol:
            converged = True
            break
        quad = K[i, i] + K[j, j] - 2.0 * K[i, j]
        lam_box_i = upper[i] - beta[i]
        lam_box_j = beta[j] - lower[j]
        lam_quad = violation / quad if quad > 1e-12 else np.inf
        lam = min(lam_box_i, lam_box_j, lam_quad)
        if lam == lam_box_i:
            beta[i] = upper[i]
            beta[j] -= lam
        elif lam == lam_box_j:
            beta[j] = lower[j]
            beta[i] += lam
        else:
            beta[i] += lam
            beta[j] -= lam
        grad -= lam * (K[:, i] - K[:, j])
        it += 1
    # Bias from the KKT conditions: grad equals y - f_hat(x), which is the
    # bias itself at any free support vector.
    free = (beta > lower + SUPPORT_EPS) & (beta < upper - SUPPORT_EPS)
    if free.any():
        bias = float(grad[free].mean())
    else:
        gi = np.where(beta < upper, grad, neg_inf)
        gj = np.where(beta > lower, grad, np.inf)
        bias = float((gi.max() + gj.min()) / 2.0)
    return beta, bias, converged, float(max(violation, 0.0)), it


class SvmBinaryClassifier:
    """One soft-margin RBF SVM separating a target class (+1) from the rest."""

    def __init__(self, sigma: float, c_box: float = DEFAULT_C_BOX,
                 tol: float = DEFAULT_TOL, max_iter: int = 100_000,
                 target_class: int = 1):
        if sigma <= 0:
            raise ValueError(f"kernel width must be positive, got {sigma}")
        if c_box <= 0:
            raise ValueError(f"box constraint must be positive, got {c_box}")
        self.sigma = float(sigma)
        self.c_box = float(c_box)
        self.tol = float(tol)
        self.max_iter = int(max_iter)
        self.target_class = int(target_class)
        self.support_vectors_ = None
        self.coef_ = None  # alpha_i * y_i per stored support vector
        self.bias_ = 0.0
        self.converged_ = False
        self.kkt_violation_ = np.inf

    def fit(self, X, y_pm) -> "SvmBinaryClassifier":
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y_pm, dtype=np.float64)
        if set(np.unique(y)) - {-1.0, 1.0}:
            raise ValueError("labels must be -1 or +1")
        if (y > 0).sum() == 0 or (y < 0).sum() == 0:
            raise ValueError("both classes must be present to train a binary SVM")
        K = rbf_kernel(X, X, self.sigma)
        beta, bias, converged, violation, _ = _smo_solve(
            K, y, self.c_box, self.tol, self.max_iter)
        keep = np.abs(beta) > SUPPORT_EPS
        self.support_vectors_ = X[keep].copy()
        self.coef_ = beta[keep].copy()
        self.bias_ = bias
        self.converged_ = converged
        self.kkt_violation_ = violation
        return self

    def decision_function(self, X) -> np.ndarray:
        if self.support_vectors_ is None:
            raise RuntimeError("classifier used before fit")
        if self.support_vectors_.shape[0] == 0:
            X = np.atleast_2d(np.asarray(X, dtype=np.float64))
            return np.full(X.shape[0], self.bias_)
        K = rbf_kernel(X, self.support_vectors_, self.sigma)
        return K @ self.coef_ + self.bias_

    def predict(self, X) -> np.ndarray:
        return np.where(self.decision_function(X) >= 0, 1, -1)


class SvmOvaClassifier:
    """One-against-all multiclass SVM: the highest decision value wins.

    When ``sigma`` is None the kernel width is set to the median pairwise
    distance of the training set (computed once, shared by all binaries).
    """

    kind = "svm"

    def __init__(self, sigma: float | None = None, c_box: float = DEFAULT_C_BOX,
                 tol: float = DEFAULT_TOL, max_iter: int = 100_000):
        self.sigma = sigma
        self.c_box = float(c_box)
        self.tol = float(tol)
        self.max_iter = int(max_iter)
        self.binaries_: list[SvmBinaryClassifier] = []
        self.class_count = 0

    def fit(self, X, y, class_count: int | None = None) -> "SvmOvaClassifier":
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.int64)
        c = int(class_count) if class_count is not None else int(y.max()) + 1
        sigma = self.sigma if self.sigma is not None else median_pairwise_distance(X)
        self.binaries_ = []
        for cls in range(c):
            y_pm = np.where(y == cls, 1.0, -1.0)
            binary = SvmBinaryClassifier(sigma, self.c_box, self.tol,
                                         self.max_iter, target_class=cls)
            self.binaries_.append(binary.fit(X, y_pm))
        self.class_count = c
        return self

    def scores(self, X) -> np.ndarray:
        if not self.binaries_:
            raise RuntimeError("classifier used before fit")
        return np.column_stack([b.decision_function(X) for b in self.binaries_])

    def predict(self, X) -> np.ndarray:
        return np.argmax(self.scores(X), axis=1)
