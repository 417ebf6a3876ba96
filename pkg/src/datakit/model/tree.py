"""Binary CART classifier on Gini impurity.

Nodes live in flat arrays; a leaf has ``feature == -1``. Rows with
``x[feature] <= threshold`` go left.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._validate import check_features, check_labels, check_width
from ..rng import SplitMix64, permutation

LEAF = -1


@dataclass(frozen=True)
class TreeHyper:
    max_depth: int | None = 8
    min_samples_split: int = 2
    max_features: int | None = None  # features tried per split; None = all


@dataclass
class TreeModel:
    feature: np.ndarray
    threshold: np.ndarray
    left: np.ndarray
    right: np.ndarray
    counts: np.ndarray  # (n_nodes, 2) class counts of the training rows reaching each node
    n_features: int
    hyper: TreeHyper = field(default_factory=TreeHyper)
    feature_names: list[str] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    kind = "tree"

    @property
    def n_nodes(self) -> int:
        return len(self.feature)

    @property
    def depth(self) -> int:
        depth = np.zeros(self.n_nodes, dtype=np.int64)
        for i in range(self.n_nodes):
            if self.feature[i] != LEAF:
                depth[self.left[i]] = depth[self.right[i]] = depth[i] + 1
        return int(depth.max())

    def used_features(self) -> set[int]:
        return {int(f) for f in self.feature if f != LEAF}

    def apply(self, X) -> np.ndarray:
        """Leaf index reached by every row."""
        X = check_width(X, self.n_features)
        node = np.zeros(len(X), dtype=np.int64)
        rows = np.arange(len(X))
        while True:
            f = self.feature[node]
            active = f != LEAF
            if not active.any():
                return node
            a_rows, a_node, a_f = rows[active], node[active], f[active]
            go_left = X[a_rows, a_f] <= self.threshold[a_node]
            node[active] = np.where(go_left, self.left[a_node], self.right[a_node])

    def predict_proba(self, X) -> np.ndarray:
        c = self.counts[self.apply(X)]
        return c[:, 1] / c.sum(axis=1)

    def predict(self, X) -> np.ndarray:
        return (self.predict_proba(X) >= 0.5).astype(np.int64)


def _gini_children(pos_left: np.ndarray, n_left: np.ndarray, n: int, total_pos: int) -> np.ndarray:
    """Weighted child impurity ``(n_l * G_l + n_r * G_r) / n`` for every cut position."""
    n_right = n - n_left
    pos_right = total_pos - pos_left
    pl = pos_left / n_left
    pr = pos_right / n_right
    g_left = 2.0 * pl * (1.0 - pl)
    g_right = 2.0 * pr * (1.0 - pr)
    return (n_left * g_left + n_right * g_right) / n


def best_split(X: np.ndarray, y: np.ndarray, features) -> tuple[int, float] | None:
    """Lowest weighted child impurity over all midpoints of the given features.

    Zero-gain splits are allowed (XOR needs one at the root). Ties go to the
    lowest feature index, then the lowest threshold.
    """
    n = len(y)
    total_pos = int(y.sum())
    best = None
    best_score = np.inf
    n_left = np.arange(1, n)
    for f in sorted(features):
        x = X[:, f]
        order = np.argsort(x, kind="stable")
        xs = x[order]
        valid = xs[1:] > xs[:-1]
        if not valid.any():
            continue
        pos_left = np.cumsum(y[order])[:-1]
        score = np.where(valid, _gini_children(pos_left, n_left, n, total_pos), np.inf)
        i = int(np.argmin(score))
        if score[i] < best_score:
            best_score = score[i]
            lo, hi = xs[i], xs[i + 1]
            thr = (lo + hi) / 2.0
            if not lo <= thr < hi:  # adjacent floats: the midpoint rounds onto hi
                thr = lo
            best = (int(f), float(thr))
    return best


def fit_tree(X, y, hyper: TreeHyper | None = None, rng: SplitMix64 | None = None,
             feature_names=None) -> TreeModel:
    hyper = hyper or TreeHyper()
    X = check_features(X)
    y = check_labels(y, len(X))
    n, p = X.shape
    k = p if hyper.max_features is None else max(1, min(p, hyper.max_features))
    if k < p and rng is None:
        rng = SplitMix64(0)

    feature, threshold, left, right, counts = [], [], [], [], []

    def new_node(idx: np.ndarray) -> int:
        pos = int(y[idx].sum())
        feature.append(LEAF)
        threshold.append(0.0)
        left.append(LEAF)
        right.append(LEAF)
        counts.append((len(idx) - pos, pos))
        return len(feature) - 1

    root = new_node(np.arange(n))
    stack = [(root, np.arange(n), 0)]
    while stack:
        node, idx, depth = stack.pop()
        neg, pos = counts[node]
        if (
            neg == 0 or pos == 0
            or len(idx) < hyper.min_samples_split
            or (hyper.max_depth is not None and depth >= hyper.max_depth)
        ):
            continue
        feats = range(p) if k == p else permutation(p, rng)[:k]
        split = best_split(X[idx], y[idx], feats)
        if split is None:
            continue
        f, thr = split
        mask = X[idx, f] <= thr
        li, ri = idx[mask], idx[~mask]
        feature[node], threshold[node] = f, thr
        left[node] = new_node(li)
        right[node] = new_node(ri)
        # right pushed first so the left subtree is expanded first
        stack.append((right[node], ri, depth + 1))
        stack.append((left[node], li, depth + 1))

    names = list(feature_names) if feature_names is not None else [f"x{i}" for i in range(p)]
    return TreeModel(
        feature=np.asarray(feature, dtype=np.int64),
        threshold=np.asarray(threshold, dtype=float),
        left=np.asarray(left, dtype=np.int64),
        right=np.asarray(right, dtype=np.int64),
        counts=np.asarray(counts, dtype=np.int64).reshape(-1, 2),
        n_features=p,
        hyper=hyper,
        feature_names=names,
    )
