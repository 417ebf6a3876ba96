"""Binary classification metrics."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.stats import rankdata

from ..errors import LengthMismatch, NonBinaryLabel, SingleClass


def _ratio(num: int, den: int) -> Fraction:
    return Fraction(num, den) if den else Fraction(0)


def display_percent(x: Fraction | float) -> str:
    """``x`` as a percentage rounded half away from zero, printed with one decimal ("90.0")."""
    v = Fraction(x) * 100
    r = math.floor(abs(v) + Fraction(1, 2))
    return f"{-r if v < 0 else r}.0"


@dataclass(frozen=True)
class ClassificationReport:
    tn: int
    fp: int
    fn: int
    tp: int
    auc: float | None = None

    @classmethod
    def from_counts(cls, tn: int, fp: int, fn: int, tp: int, auc: float | None = None) -> "ClassificationReport":
        return cls(int(tn), int(fp), int(fn), int(tp), auc)

    @property
    def total(self) -> int:
        return self.tn + self.fp + self.fn + self.tp

    @property
    def confusion(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Rows are actual (negative, positive); columns are predicted (negative, positive)."""
        return (self.tn, self.fp), (self.fn, self.tp)

    # exact rational values; the float properties below are derived from these
    def exact(self) -> dict[str, Fraction]:
        return {
            "accuracy": _ratio(self.tn + self.tp, self.total),
            "precision": _ratio(self.tp, self.tp + self.fp),
            "recall": _ratio(self.tp, self.tp + self.fn),
            "f1": _ratio(2 * self.tp, 2 * self.tp + self.fp + self.fn),
        }

    @property
    def accuracy(self) -> float:
        return float(self.exact()["accuracy"])

    @property
    def precision(self) -> float:
        return float(self.exact()["precision"])

    @property
    def recall(self) -> float:
        return float(self.exact()["recall"])

    @property
    def f1(self) -> float:
        return float(self.exact()["f1"])

    def display(self) -> dict[str, str]:
        return {k: display_percent(v) for k, v in self.exact().items()}

    def to_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "auc": self.auc,
            "confusion": [list(r) for r in self.confusion],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_text(self) -> str:
        d = self.display()
        lines = [
            f"Accuracy is {d['accuracy']}",
            f"F1 score is {d['f1']}",
            f"Precision is {d['precision']}",
            f"Recall is {d['recall']}",
        ]
        if self.auc is not None:
            lines.append(f"AUC is {self.auc:.4f}")
        w = max(len(str(v)) for v in (self.tn, self.fp, self.fn, self.tp, "predicted positive"))
        lines += [
            "",
            "Confusion matrix",
            f"{'':<16}{'predicted negative':>{w + 2}}{'predicted positive':>{w + 2}}",
            f"{'actual negative':<16}{self.tn:>{w + 2}}{self.fp:>{w + 2}}",
            f"{'actual positive':<16}{self.fn:>{w + 2}}{self.tp:>{w + 2}}",
        ]
        return "\n".join(lines) + "\n"


def _binary(name: str, v: Sequence) -> np.ndarray:
    a = np.asarray(v)
    if a.size and not np.isin(a, (0, 1)).all():
        raise NonBinaryLabel(f"NonBinaryLabel: {name} contains values other than 0 and 1")
    return a.astype(np.int64)


def classification_report(y_true: Sequence, y_pred: Sequence, scores: Sequence | None = None) -> ClassificationReport:
    if len(y_true) != len(y_pred) or len(y_true) == 0:
        raise LengthMismatch(f"LengthMismatch: {len(y_true)} labels vs {len(y_pred)} predictions")
    t = _binary("y_true", y_true)
    p = _binary("y_pred", y_pred)
    tp = int(np.sum((t == 1) & (p == 1)))
    tn = int(np.sum((t == 0) & (p == 0)))
    fp = int(np.sum((t == 0) & (p == 1)))
    fn = int(np.sum((t == 1) & (p == 0)))
    auc = None
    if scores is not None:
        if len(scores) != len(t):
            raise LengthMismatch(f"LengthMismatch: {len(t)} labels vs {len(scores)} scores")
        if 0 < t.sum() < len(t):
            auc = roc_auc(t, scores)
    return ClassificationReport(tn, fp, fn, tp, auc)


def roc_auc(y_true: Sequence, scores: Sequence) -> float:
    """Mann-Whitney form: P(score of a random positive > random negative), ties count 1/2."""
    t = _binary("y_true", y_true)
    s = np.asarray(scores, dtype=float)
    if len(s) != len(t):
        raise LengthMismatch(f"LengthMismatch: {len(t)} labels vs {len(s)} scores")
    n_pos = int(t.sum())
    n_neg = len(t) - n_pos
    if n_pos == 0 or n_neg == 0:
        raise SingleClass("SingleClass: roc_auc needs both classes")
    ranks = rankdata(s)  # average ranks for ties
    u = ranks[t == 1].sum() - n_pos * (n_pos + 1) / 2
    return float(u / (n_pos * n_neg))


def accuracy(y_true, y_pred) -> float:
    return classification_report(y_true, y_pred).accuracy


def f1_score(y_true, y_pred) -> float:
    return classification_report(y_true, y_pred).f1
