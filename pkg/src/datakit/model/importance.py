"""Permutation feature importance."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ._validate import check_labels, check_width
from .metrics import classification_report, roc_auc
from ..rng import SplitMix64, permutation


@dataclass(frozen=True)
class ImportanceEntry:
    name: str
    importance: float
    std: float


@dataclass(frozen=True)
class ImportanceReport:
    metric: str
    baseline: float
    entries: list[ImportanceEntry]

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def to_dict(self) -> dict:
        return {
            "metric": self.metric,
            "baseline": self.baseline,
            "features": [{"name": e.name, "importance": e.importance, "std": e.std} for e in self.entries],
        }

    def to_text(self) -> str:
        w = max([len(e.name) for e in self.entries] + [7])
        lines = [f"baseline {self.metric}: {self.baseline:.6f}", f"{'feature':<{w}}  importance       std"]
        lines += [f"{e.name:<{w}}  {e.importance:10.6f}  {e.std:8.6f}" for e in self.entries]
        return "\n".join(lines) + "\n"


def scorer(metric: str) -> Callable:
    if metric == "accuracy":
        return lambda model, X, y: classification_report(y, model.predict(X)).accuracy
    if metric == "f1":
        return lambda model, X, y: classification_report(y, model.predict(X)).f1
    if metric == "auc":
        return lambda model, X, y: roc_auc(y, model.predict_proba(X))
    raise ValueError(f"unknown metric {metric!r}; expected f1, accuracy or auc")


def permutation_importance(model, X, y, metric: str = "f1", repeats: int = 5, seed: int = 0,
                           feature_names: Sequence[str] | None = None) -> ImportanceReport:
    """Score drop when each column is shuffled, averaged over ``repeats`` shuffles.

    One SplitMix64 stream drives every shuffle, feature by feature, so the
    report is a pure function of ``seed``.
    """
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    X = check_width(X, model.n_features).copy()
    y = check_labels(y, len(X))
    score = scorer(metric)
    names = list(feature_names or getattr(model, "feature_names", None) or
                 [f"x{i}" for i in range(X.shape[1])])
    baseline = score(model, X, y)
    rng = SplitMix64(seed)
    rows = []
    for j in range(X.shape[1]):
        drops = []
        original = X[:, j].copy()
        for _ in range(repeats):
            X[:, j] = original[permutation(len(original), rng)]
            drops.append(baseline - score(model, X, y))
        X[:, j] = original
        rows.append((j, float(np.mean(drops)), float(np.std(drops))))
    rows.sort(key=lambda r: (-r[1], r[0]))
    return ImportanceReport(metric, float(baseline), [ImportanceEntry(names[j], m, s) for j, m, s in rows])
