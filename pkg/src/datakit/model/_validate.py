from __future__ import annotations

import numpy as np

from ..errors import LengthMismatch, NonBinaryLabel, NullInFeatures, ShapeMismatch


def check_features(X) -> np.ndarray:
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X.reshape(-1, 1)
    if X.ndim != 2:
        raise ShapeMismatch(f"ShapeMismatch: expected a 2-D feature matrix, got {X.ndim}-D")
    if np.isnan(X).any():
        raise NullInFeatures("NullInFeatures: feature matrix contains nulls")
    return X


def check_width(X, n_features: int) -> np.ndarray:
    X = check_features(X)
    if X.shape[1] != n_features:
        raise ShapeMismatch(f"ShapeMismatch: model expects {n_features} features, got {X.shape[1]}")
    return X


def check_labels(y, n: int) -> np.ndarray:
    y = np.asarray(y)
    if y.ndim != 1 or len(y) != n:
        raise LengthMismatch(f"LengthMismatch: {n} rows vs {y.shape} labels")
    if not np.isin(y, (0, 1)).all():
        raise NonBinaryLabel("NonBinaryLabel: labels must be 0 or 1")
    return y.astype(np.int64)
