"""L2-regularised logistic regression by full-batch gradient descent."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import expit

from ._validate import check_features, check_labels, check_width
from ..errors import SingleClass


@dataclass(frozen=True)
class LogisticHyper:
    learning_rate: float = 0.1
    max_iter: int = 1000
    tol: float = 1e-6
    l2: float = 0.0


@dataclass
class LogisticModel:
    weights: np.ndarray
    bias: float
    feature_means: np.ndarray
    feature_stds: np.ndarray
    hyper: LogisticHyper = field(default_factory=LogisticHyper)
    feature_names: list[str] = field(default_factory=list)
    meta: dict = field(default_factory=dict)
    loss_history: list[float] = field(default_factory=list, repr=False)

    kind = "logistic"

    @property
    def n_features(self) -> int:
        return len(self.weights)

    def standardize(self, X: np.ndarray) -> np.ndarray:
        return (X - self.feature_means) / self.feature_stds

    def decision_function(self, X) -> np.ndarray:
        X = check_width(X, self.n_features)
        return self.standardize(X) @ self.weights + self.bias

    def predict_proba(self, X) -> np.ndarray:
        return expit(self.decision_function(X))

    def predict(self, X) -> np.ndarray:
        return (self.predict_proba(X) >= 0.5).astype(np.int64)


def loss_and_grad(w: np.ndarray, b: float, Z: np.ndarray, y: np.ndarray, l2: float = 0.0):
    """Mean binary cross-entropy plus ``l2/2 * |w|^2`` and its gradient in (w, b)."""
    s = Z @ w + b
    loss = float(np.mean(np.logaddexp(0.0, s) - y * s) + 0.5 * l2 * (w @ w))
    r = expit(s) - y
    gw = Z.T @ r / len(y) + l2 * w
    gb = float(np.mean(r))
    return loss, gw, gb


def fit_logistic(X, y, hyper: LogisticHyper | None = None, feature_names=None) -> LogisticModel:
    """Standardise features, then descend with step halving whenever the loss would rise.

    Constant features keep std 1 and weight 0.
    """
    hyper = hyper or LogisticHyper()
    X = check_features(X)
    y = check_labels(y, len(X)).astype(float)
    if len(y) < 2 or y.min() == y.max():
        raise SingleClass("SingleClass: logistic regression needs both classes")

    means = X.mean(axis=0)
    const = np.ptp(X, axis=0) == 0
    stds = np.where(const, 1.0, X.std(axis=0))
    Z = (X - means) / stds
    Z[:, const] = 0.0
    free = (~const).astype(float)

    w = np.zeros(X.shape[1])
    b = 0.0
    lr = hyper.learning_rate
    loss, gw, gb = loss_and_grad(w, b, Z, y, hyper.l2)
    history = [loss]
    for _ in range(hyper.max_iter):
        w_new = w - lr * gw * free
        b_new = b - lr * gb
        new_loss, new_gw, new_gb = loss_and_grad(w_new, b_new, Z, y, hyper.l2)
        if new_loss > loss:
            lr *= 0.5
            if lr < 1e-12:
                break
            continue
        delta = loss - new_loss
        w, b, loss, gw, gb = w_new, b_new, new_loss, new_gw, new_gb
        history.append(loss)
        if delta < hyper.tol:
            break

    names = list(feature_names) if feature_names is not None else [f"x{i}" for i in range(X.shape[1])]
    return LogisticModel(w, float(b), means, stds, hyper, names, loss_history=history)
