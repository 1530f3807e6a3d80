"""Single-hidden-layer perceptron trained by backpropagation."""

from __future__ import annotations

import numpy as np


def _sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def _log_softmax(z: np.ndarray) -> np.ndarray:
    m = z.max(axis=1, keepdims=True)
    return z - m - np.log(np.exp(z - m).sum(axis=1, keepdims=True))


class MlpClassifier:
    """d -> hidden (logistic sigmoid) -> C (softmax), cross-entropy loss.

    Trained with mini-batch gradient descent plus momentum. Weights start
    uniform in +/-sqrt(6 / (fan_in + fan_out)) drawn from ``seed``; training
    (shuffling included) is fully deterministic given the seed.
    """

    kind = "mlp"

    def __init__(self, hidden: int = 16, epochs: int = 400,
                 learning_rate: float = 0.1, momentum: float = 0.9,
                 batch_size: int = 16, seed: int = 0):
        if hidden < 1:
            raise ValueError(f"hidden unit count must be >= 1, got {hidden}")
        if epochs < 1:
            raise ValueError(f"epoch count must be >= 1, got {epochs}")
        self.hidden = int(hidden)
        self.epochs = int(epochs)
        self.learning_rate = float(learning_rate)
        self.momentum = float(momentum)
        self.batch_size = int(batch_size)
        self.seed = int(seed)
        self.w1 = None
        self.b1 = None
        self.w2 = None
        self.b2 = None
        self.class_count = 0
        self.loss_history_: list[float] = []

    def _init_weights(self, d: int, c: int, rng: np.random.Generator) -> None:
        lim1 = np.sqrt(6.0 / (d + self.hidden))
        lim2 = np.sqrt(6.0 / (self.hidden + c))
        self.w1 = rng.uniform(-lim1, lim1, size=(d, self.hidden))
        self.b1 = np.zeros(self.hidden)
        self.w2 = rng.uniform(-lim2, lim2, size=(self.hidden, c))
        self.b2 = np.zeros(c)

    def loss_and_gradients(self, X, y):
        """Mean cross-entropy on (X, y) and its gradients wrt all parameters.

        Returns (loss, (dw1, db1, dw2, db2)).
        """
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        y = np.asarray(y, dtype=np.int64)
        n = X.shape[0]
        a1 = _sigmoid(X @ self.w1 + self.b1)
        z2 = a1 @ self.w2 + self.b2
        logp = _log_softmax(z2)
        loss = float(-logp[np.arange(n), y].mean())
        delta2 = np.exp(logp)
        delta2[np.arange(n), y] -= 1.0
        delta2 /= n
        dw2 = a1.T @ delta2
        db2 = delta2.sum(axis=0)
        delta1 = (delta2 @ self.w2.T) * a1 * (1.0 - a1)
        dw1 = X.T @ delta1
        db1 = delta1.sum(axis=0)
        return loss, (dw1, db1, dw2, db2)

    def fit(self, X, y, class_count: int | None = None) -> "MlpClassifier":
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.int64)
        n, d = X.shape
        c = int(class_count) if class_count is not None else int(y.max()) + 1
        rng = np.random.default_rng(self.seed)
        self._init_weights(d, c, rng)
        self.class_count = c
        velocity = [np.zeros_like(p) for p in (self.w1, self.b1, self.w2, self.b2)]
        self.loss_history_ = []
        batch = min(self.batch_size, n)
        for _ in range(self.epochs):
            order = rng.permutation(n)
            for start in range(0, n, batch):
                idx = order[start:start + batch]
                _, grads = self.loss_and_gradients(X[idx], y[idx])
                params = (self.w1, self.b1, self.w2, self.b2)
                for p, v, g in zip(params, velocity, grads):
                    v *= self.momentum
                    v -= self.learning_rate * g
                    p += v
            epoch_loss, _ = self.loss_and_gradients(X, y)
            if not np.isfinite(epoch_loss):
                raise FloatingPointError(
                    f"training diverged: non-finite loss at epoch {len(self.loss_history_)}")
            self.loss_history_.append(epoch_loss)
        return self

    def posteriors(self, X) -> np.ndarray:
        if self.w1 is None:
            raise RuntimeError("classifier used before fit")
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        if X.shape[1] != self.w1.shape[0]:
            raise ValueError(f"expected {self.w1.shape[0]} features, got {X.shape[1]}")
        a1 = _sigmoid(X @ self.w1 + self.b1)
        return np.exp(_log_softmax(a1 @ self.w2 + self.b2))

    def scores(self, X) -> np.ndarray:
        return self.posteriors(X)

    def predict(self, X) -> np.ndarray:
        return np.argmax(self.posteriors(X), axis=1)
