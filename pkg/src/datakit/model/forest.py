"""Bagged ensemble of CART trees with per-split feature subsampling."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._validate import check_features, check_labels, check_width
from .tree import TreeHyper, TreeModel, fit_tree
from ..rng import SplitMix64


@dataclass(frozen=True)
class ForestHyper:
    n_trees: int = 100
    max_depth: int | None = 8
    min_samples_split: int = 2
    max_features: int | str | None = "sqrt"  # "sqrt" = ceil(sqrt(p)); None = all
    bootstrap: bool = True

    def features_per_split(self, p: int) -> int:
        if self.max_features is None:
            return p
        if self.max_features == "sqrt":
            return max(1, math.ceil(math.sqrt(p)))
        return max(1, min(p, int(self.max_features)))


@dataclass
class ForestModel:
    trees: list[TreeModel]
    tree_seeds: list[int]
    features_per_split: int
    n_features: int
    hyper: ForestHyper = field(default_factory=ForestHyper)
    feature_names: list[str] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    kind = "forest"

    def predict_proba(self, X) -> np.ndarray:
        X = check_width(X, self.n_features)
        votes = np.zeros(len(X))
        for t in self.trees:
            votes += t.predict(X)
        return votes / len(self.trees)

    def predict(self, X) -> np.ndarray:
        return (self.predict_proba(X) >= 0.5).astype(np.int64)


def fit_forest(X, y, hyper: ForestHyper | None = None, seed: int = 0, feature_names=None) -> ForestModel:
    hyper = hyper or ForestHyper()
    if hyper.n_trees < 1:
        raise ValueError("n_trees must be >= 1")
    X = check_features(X)
    y = check_labels(y, len(X))
    n, p = X.shape
    k = hyper.features_per_split(p)
    tree_hyper = TreeHyper(hyper.max_depth, hyper.min_samples_split, None if k == p else k)

    master = SplitMix64(seed)
    seeds = [master.next() for _ in range(hyper.n_trees)]
    trees = []
    for s in seeds:
        rng = SplitMix64(s)
        if hyper.bootstrap:
            idx = np.fromiter((rng.next() % n for _ in range(n)), dtype=np.int64, count=n)
            Xb, yb = X[idx], y[idx]
        else:
            Xb, yb = X, y
        trees.append(fit_tree(Xb, yb, tree_hyper, rng=rng, feature_names=feature_names))

    names = list(feature_names) if feature_names is not None else [f"x{i}" for i in range(p)]
    return ForestModel(trees, seeds, k, p, hyper, names)
