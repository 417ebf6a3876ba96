"""Turning a Frame into a numeric design matrix and a 0/1 target vector.

The encoding is frozen at fit time and travels inside the model file's
``meta`` so that later frames are encoded identically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import NonBinaryLabel, NullInFeatures, UnknownColumn
from ..feature_engineering import class_label, fit_classes
from ..frame import DType, Frame

UNSEEN_CODE = -1.0


def _target_key(v):
    return (0, v, "") if isinstance(v, (int, float)) else (1, 0, class_label(v))


@dataclass
class FeatureEncoder:
    target: str
    features: list[str]
    kinds: dict[str, str]  # numeric | bool | datetime | label
    classes: dict[str, list[str]] = field(default_factory=dict)
    target_classes: list[str] = field(default_factory=list)
    positive: str | None = None

    @classmethod
    def fit(cls, frame: Frame, target: str, positive=None) -> "FeatureEncoder":
        if target not in frame:
            raise UnknownColumn(target)
        kinds, classes = {}, {}
        features = [n for n in frame.names if n != target]
        for name in features:
            c = frame[name]
            if c.dtype.is_numeric:
                kinds[name] = "numeric"
            elif c.dtype is DType.BOOL:
                kinds[name] = "bool"
            elif c.dtype is DType.DATETIME:
                kinds[name] = "datetime"
            else:
                kinds[name] = "label"
                classes[name] = fit_classes(c)
        values = sorted(set(frame[target].non_null()), key=_target_key)
        if len(values) > 2:
            raise NonBinaryLabel(f"NonBinaryLabel: target {target!r} has {len(values)} classes")
        labels = [class_label(v) for v in values]
        if positive is not None:
            positive = class_label(positive)
            if positive not in labels:
                labels.append(positive)
        else:
            # the larger of the two labels is the positive class
            positive = labels[-1] if labels else None
        return cls(target, features, kinds, classes, labels, positive)

    def transform_features(self, frame: Frame) -> np.ndarray:
        X = np.empty((frame.n_rows, len(self.features)))
        for j, name in enumerate(self.features):
            c = frame[name]
            kind = self.kinds[name]
            if kind == "numeric":
                col = [np.nan if v is None else float(v) for v in c.values]
            elif kind == "bool":
                col = [np.nan if v is None else float(bool(v)) for v in c.values]
            elif kind == "datetime":
                col = [np.nan if v is None else float(v.epoch_s) for v in c.values]
            else:
                lookup = {k: float(i) for i, k in enumerate(self.classes[name])}
                col = [np.nan if v is None else lookup.get(class_label(v), UNSEEN_CODE) for v in c.values]
            X[:, j] = col
        bad = [self.features[j] for j in np.flatnonzero(np.isnan(X).any(axis=0))]
        if bad:
            raise NullInFeatures(f"NullInFeatures: nulls in {bad}; fill them first (clean --fill)")
        return X

    def transform_target(self, frame: Frame) -> np.ndarray:
        c = frame[self.target]
        if c.null_count:
            raise NullInFeatures(f"NullInFeatures: target {self.target!r} has nulls")
        labels = [class_label(v) for v in c.values]
        unknown = set(labels) - set(self.target_classes)
        if unknown:
            raise NonBinaryLabel(f"NonBinaryLabel: unexpected target values {sorted(unknown)}")
        return np.asarray([int(lab == self.positive) for lab in labels], dtype=np.int64)

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "features": list(self.features),
            "kinds": dict(self.kinds),
            "classes": {k: list(v) for k, v in self.classes.items()},
            "target_classes": list(self.target_classes),
            "positive": self.positive,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FeatureEncoder":
        return cls(
            target=d["target"],
            features=list(d["features"]),
            kinds=dict(d["kinds"]),
            classes={k: list(v) for k, v in d["classes"].items()},
            target_classes=list(d["target_classes"]),
            positive=d["positive"],
        )
